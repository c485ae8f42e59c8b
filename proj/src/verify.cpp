/*
 Copyright 2026 sampinfo authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "depnormal.hpp"
#include "design.hpp"
#include "gaussmi.hpp"
#include "linmodel.hpp"
#include "oracle.hpp"
#include "orderstats.hpp"
#include "specfn.hpp"
#include "tte.hpp"

namespace sampinfo::verify {

namespace {

using depnormal::DepNormalSpec;
using depnormal::Family;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

// Golden-section minimization of a unimodal function on [a, b].
double golden_min(const std::function<double(double)>& f, double a, double b,
                  double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > xtol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

double joint_at(Family family, int n, double rho, double eta) {
  return depnormal::joint_info({family, rho, n, eta}).joint;
}

// Best objective over the simplex {w >= 0, sum w = budget} on a grid with
// `m` points per dimension (p = 2 or 3).
double grid_best(double budget, std::size_t p, int m,
                 const std::function<double(std::span<const double>)>& obj) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<double> w(p);
  if (p == 2) {
    for (int i = 0; i <= m; ++i) {
      w[0] = budget * i / m;
      w[1] = budget - w[0];
      best = std::max(best, obj(w));
    }
  } else if (p == 3) {
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; i + j <= m; ++j) {
        w[0] = budget * i / m;
        w[1] = budget * j / m;
        w[2] = budget - w[0] - w[1];
        if (w[2] < 0.0) w[2] = 0.0;
        best = std::max(best, obj(w));
      }
    }
  } else {
    throw std::invalid_argument("grid_best supports p = 2 or 3");
  }
  return best;
}

// Explicit conditional correlation matrix (n-dimensional) per family.
Eigen::MatrixXd family_correlation(Family family, int n, double rho) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      double v = 0.0;
      if (family == Family::IC) v = rho;
      if (family == Family::SC) v = std::pow(rho, i - j);
      r(i, j) = v;
      r(j, i) = v;
    }
  }
  return r;
}

class Runner {
 public:
  explicit Runner(const Options& opt) : opt_(opt) {}

  Report finish() && { return std::move(report_); }

  void add(int criterion, std::string id, std::string name, Status status,
           std::string detail,
           std::vector<std::pair<std::string, double>> values = {}) {
    report_.entries.push_back(Entry{criterion, std::move(id), std::move(name),
                                    status, std::move(detail),
                                    std::move(values)});
  }

  void check(int criterion, std::string id, std::string name, bool ok,
             std::string detail,
             std::vector<std::pair<std::string, double>> values = {}) {
    add(criterion, std::move(id), std::move(name),
        ok ? Status::pass : Status::fail, std::move(detail),
        std::move(values));
  }

  const Options& opt() const { return opt_; }
  Report report_;

 private:
  Options opt_;
};

// --- criterion 1: sample-size reproduction -------------------------------

void criterion1(Runner& r) {
  const double eta = 0.5;
  const double tol = 1e-3 * r.opt().tolerance_scale;
  struct Case {
    Family family;
    double rho;
    int expect_n;
    double printed_value;
    const char* id;
  };
  const Case cases[] = {
      {Family::UC, 0.0, 3, 0.973, "uc"},
      {Family::SC, 0.50, 8, 1.019, "sc-rho-0.50"},
      {Family::SC, 0.75, 16, 0.993, "sc-rho-0.75"},
  };
  for (const auto& c : cases) {
    const auto res = depnormal::sample_size_for_info(
        c.family, c.rho, eta, 1.0, depnormal::Measure::parameter,
        depnormal::SearchPolicy::nearest);
    const bool reached = res.reachability == depnormal::Reachability::reached;
    const double closed =
        depnormal::parameter_info({c.family, c.rho, c.expect_n, eta});
    const bool ok = reached && res.n == c.expect_n &&
                    std::abs(closed - c.printed_value) <= tol;
    r.check(1, std::string("c01.") + c.id,
            "one-nat parameter-information sample size", ok,
            "nearest-to-target search at eta=0.5",
            {{"expected_n", c.expect_n},
             {"computed_n", static_cast<double>(res.n)},
             {"closed_form_value", closed},
             {"reference_value", c.printed_value}});
  }
  // Intraclass: the measure is bounded below one nat, so the
  // figure-derived sample sizes (26 and 37) cannot be reproduced.
  const double rhos[] = {0.50, 0.75};
  const int figure_n[] = {26, 37};
  for (int i = 0; i < 2; ++i) {
    const auto res = depnormal::sample_size_for_info(
        Family::IC, rhos[i], eta, 1.0, depnormal::Measure::parameter,
        depnormal::SearchPolicy::nearest);
    const double bound =
        depnormal::measure_supremum(Family::IC, rhos[i], eta,
                                    depnormal::Measure::parameter);
    const bool unreachable_detected =
        res.reachability == depnormal::Reachability::unreachable;
    r.add(1, std::string("c01.ic-rho-") + fmt(rhos[i]),
          "intraclass one-nat sample size (figure-derived reference)",
          unreachable_detected ? Status::expected_mismatch : Status::fail,
          "documented discrepancy: the intraclass parameter information is "
          "bounded strictly below the one-nat target, so the figure-derived "
          "sample size cannot be reproduced; the bound is reported",
          {{"figure_reference_n", static_cast<double>(figure_n[i])},
           {"rho", rhos[i]},
           {"information_bound_nats", bound}});
  }
}

// --- criterion 2: three-way decomposition identity ------------------------

void criterion2(Runner& r) {
  const double tol = 1e-12 * r.opt().tolerance_scale;
  double worst = 0.0;
  double worst_alpha = 0.0;
  int worst_n = 0;
  for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
    for (int n = 1; n <= 50; ++n) {
      const auto d = tte::decomposition({alpha, 1.0}, n);
      if (std::abs(d.residual) > worst) {
        worst = std::abs(d.residual);
        worst_alpha = alpha;
        worst_n = n;
      }
    }
  }
  r.check(2, "c02.decomposition-identity",
          "parameter = predictive + shifted-prior parameter", worst <= tol,
          "max |residual| over alpha in {0.5,1,2,4}, n in 1..50",
          {{"max_abs_residual", worst},
           {"tolerance", tol},
           {"worst_alpha", worst_alpha},
           {"worst_n", static_cast<double>(worst_n)}});
}

// --- criterion 3: TTE oracle agreement ------------------------------------

void criterion3(Runner& r) {
  const double base_tol = 1e-6 * r.opt().tolerance_scale;
  double worst = 0.0;
  std::vector<std::pair<std::string, double>> values;
  bool ok = true;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (int n : {1, 2, 3, 5}) {
      const double closed = tte::parameter_info({alpha, 1.0}, n);
      const auto q = oracle::mi_quadrature_tte(alpha, n);
      const double dev = std::abs(closed - q.estimate);
      worst = std::max(worst, dev);
      if (dev > std::max(base_tol, q.error_bound)) ok = false;
      values.emplace_back("dev_a" + fmt(alpha) + "_n" + fmt(n), dev);
    }
  }
  values.emplace_back("max_abs_deviation", worst);
  r.check(3, "c03.quadrature-agreement",
          "closed form vs defining-integral quadrature", ok,
          "12 (alpha, n) combinations", values);

  oracle::MonteCarloSettings mc;
  mc.seed = r.opt().seed;
  mc.replications = 100000;
  const auto est_exp = oracle::mi_montecarlo_tte(
      tte::Transform::exponential, 0.0, 1.0, 1.0, 3, mc);
  const auto est_wei = oracle::mi_montecarlo_tte(
      tte::Transform::weibull, 2.0, 1.0, 1.0, 3, mc);
  const double gap = std::abs(est_exp.estimate - est_wei.estimate);
  const double three_se =
      3.0 * std::hypot(est_exp.standard_error, est_wei.standard_error);
  r.check(3, "c03.mc-transform-invariance",
          "Monte Carlo invariance across transforms", gap <= three_se,
          "Weibull(q=2) vs exponential generation at alpha=1, n=3",
          {{"estimate_exponential", est_exp.estimate},
           {"estimate_weibull", est_wei.estimate},
           {"gap", gap},
           {"three_standard_errors", three_se}});
}

// --- criterion 4: order-statistic oracle agreement -------------------------

void criterion4(Runner& r) {
  const double tol = 1e-6 * r.opt().tolerance_scale;
  double worst = 0.0;
  bool ok = true;
  for (int n = 2; n <= 10; ++n) {
    for (int rr = 1; rr < n; ++rr) {
      const double closed = orderstats::markov_dependence_info({n, rr});
      const double est =
          oracle::mi_quadrature_consecutive_uniform_order_stats(n, rr);
      const double dev = std::abs(closed - est);
      worst = std::max(worst, dev);
      if (dev > tol) ok = false;
    }
  }
  r.check(4, "c04.quadrature-agreement",
          "Markov dependence closed form vs uniform order-statistic "
          "quadrature",
          ok, "all n <= 10, 1 <= r < n",
          {{"max_abs_deviation", worst}, {"tolerance", tol}});

  const double sym_tol = 1e-12 * r.opt().tolerance_scale;
  double worst_sym = 0.0;
  bool median_ok = true;
  for (int n = 2; n <= 60; ++n) {
    for (int rr = 1; rr < n; ++rr) {
      worst_sym = std::max(
          worst_sym, std::abs(orderstats::markov_dependence_info({n, rr}) -
                              orderstats::markov_dependence_info({n, n - rr})));
    }
    const auto maxima = orderstats::markov_max_r(n);
    for (int m : maxima) {
      if (m != n / 2 && m != (n + 1) / 2) median_ok = false;
    }
  }
  r.check(4, "c04.symmetry", "M_n(r) = M_n(n-r)", worst_sym <= sym_tol,
          "n <= 60", {{"max_abs_asymmetry", worst_sym}});
  r.check(4, "c04.median-maximum", "dependence maximal at the median",
          median_ok, "n <= 60", {});
}

// --- criterion 5: brute-force matrix agreement -----------------------------

void criterion5(Runner& r) {
  const double tol = 1e-10 * r.opt().tolerance_scale;
  double worst_tn = 0.0;
  double worst_r2 = 0.0;
  double worst_det_ic = 0.0;
  double worst_det_sc = 0.0;
  for (int n = 2; n <= 12; ++n) {
    for (int k = 1; k <= 9; ++k) {
      const double rho = k / 10.0;
      for (Family fam : {Family::IC, Family::SC}) {
        const DepNormalSpec spec{fam, rho, n, 1.0};
        // T_n against the explicit inverse.
        const Eigen::MatrixXd rm = family_correlation(fam, n, rho);
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
        const double tn_matrix = rm.llt().solve(ones).sum();
        worst_tn = std::max(worst_tn,
                            std::abs(tn_matrix - depnormal::t_n(spec)));
        // Conditional dependence against the inverse-element route on the
        // (n+1)-dimensional conditional correlation matrix.
        const Eigen::MatrixXd cfull = family_correlation(fam, n + 1, rho);
        std::vector<double> flat(cfull.data(),
                                 cfull.data() + (n + 1) * (n + 1));
        const gaussmi::CorrelationMatrix cm(
            flat, static_cast<std::size_t>(n + 1));
        const double mi_matrix =
            gaussmi::mi_via_inverse_element(cm, static_cast<std::size_t>(n));
        worst_r2 = std::max(
            worst_r2,
            std::abs(mi_matrix - depnormal::conditional_dependence_info(spec)));
        // Determinants.
        const double det = rm.determinant();
        if (fam == Family::IC) {
          const double closed = (1.0 + (n - 1) * rho) *
                                std::pow(1.0 - rho, n - 1);
          worst_det_ic =
              std::max(worst_det_ic, std::abs(det / closed - 1.0));
        } else {
          const double closed = std::pow(1.0 - rho * rho, n - 1);
          worst_det_sc =
              std::max(worst_det_sc, std::abs(det / closed - 1.0));
        }
      }
    }
  }
  r.check(5, "c05.effective-sample-size",
          "closed T_n vs sum of the explicit inverse", worst_tn <= tol,
          "n <= 12, rho in {0.1..0.9}, IC and SC",
          {{"max_abs_deviation", worst_tn}});
  r.check(5, "c05.conditional-dependence",
          "closed conditional dependence vs inverse-element route",
          worst_r2 <= tol, "n <= 12, rho in {0.1..0.9}",
          {{"max_abs_deviation", worst_r2}});
  r.check(5, "c05.determinant-ic", "intraclass determinant closed form",
          worst_det_ic <= tol, "relative agreement",
          {{"max_rel_deviation", worst_det_ic}});
  r.check(5, "c05.determinant-sc",
          "serial determinant equals (1-rho^2)^(n-1)", worst_det_sc <= tol,
          "relative agreement", {{"max_rel_deviation", worst_det_sc}});
  r.add(5, "c05.determinant-sc-tabulated",
        "tabulated serial determinant entry", Status::expected_mismatch,
        "documented discrepancy: the tabulated serial-correlation "
        "determinant (1 - rho^2) is the per-step factor; the n-dimensional "
        "determinant verified here is (1 - rho^2)^(n-1)",
        {});
}

// --- criterion 6: monotonicity and family ordering -------------------------

void criterion6(Runner& r) {
  const double eq_tol = 1e-9;
  const double strict_tol = 1e-12;
  bool param_ok = true;
  bool pred_ok = true;
  std::string first_param_violation;
  std::string first_pred_violation;
  for (double eta : {0.25, 0.5, 0.75}) {
    for (int n = 2; n <= 100; ++n) {
      double prev_param_ic = std::numeric_limits<double>::infinity();
      double prev_param_sc = std::numeric_limits<double>::infinity();
      double prev_pred_ic = -1.0;
      double prev_pred_sc = -1.0;
      const DepNormalSpec uc{Family::UC, 0.0, n, eta};
      const double uc_param = depnormal::parameter_info(uc);
      const double uc_pred = depnormal::predictive_info(uc);
      for (int k = 0; k <= 19; ++k) {
        const double rho = 0.05 * k;
        const DepNormalSpec ic{Family::IC, rho, n, eta};
        const DepNormalSpec sc{Family::SC, rho, n, eta};
        const double p_ic = depnormal::parameter_info(ic);
        const double p_sc = depnormal::parameter_info(sc);
        const double q_ic = depnormal::predictive_info(ic);
        const double q_sc = depnormal::predictive_info(sc);
        auto fail_param = [&](const char* what) {
          if (param_ok) {
            first_param_violation = std::string(what) + " at n=" + fmt(n) +
                                    " rho=" + fmt(rho) + " eta=" + fmt(eta);
          }
          param_ok = false;
        };
        auto fail_pred = [&](const char* what) {
          if (pred_ok) {
            first_pred_violation = std::string(what) + " at n=" + fmt(n) +
                                   " rho=" + fmt(rho) + " eta=" + fmt(eta);
          }
          pred_ok = false;
        };
        if (rho == 0.0) {
          if (std::abs(p_ic - uc_param) > eq_tol ||
              std::abs(p_sc - uc_param) > eq_tol) {
            fail_param("equality at rho=0");
          }
          if (std::abs(q_ic - uc_pred) > eq_tol ||
              std::abs(q_sc - uc_pred) > eq_tol) {
            fail_pred("equality at rho=0");
          }
        } else {
          // parameter: decreasing in rho, IC <= SC <= UC, strict.
          if (!(p_ic < prev_param_ic + strict_tol) ||
              !(p_sc < prev_param_sc + strict_tol)) {
            fail_param("monotone decrease in rho");
          }
          if (!(p_ic < p_sc + strict_tol) || !(p_sc < uc_param + strict_tol)) {
            fail_param("ordering IC <= SC <= UC");
          }
          // predictive: increasing in rho, IC >= SC >= UC, strict.
          if (!(q_ic > prev_pred_ic - strict_tol) ||
              !(q_sc > prev_pred_sc - strict_tol)) {
            fail_pred("monotone increase in rho");
          }
          if (!(q_ic > q_sc - strict_tol) || !(q_sc > uc_pred - strict_tol)) {
            fail_pred("ordering IC >= SC >= UC");
          }
        }
        prev_param_ic = p_ic;
        prev_param_sc = p_sc;
        prev_pred_ic = q_ic;
        prev_pred_sc = q_sc;
      }
    }
  }
  r.check(6, "c06.parameter-ordering",
          "parameter information decreasing in rho with IC <= SC <= UC",
          param_ok,
          param_ok ? "full grid n in 2..100, rho in {0,0.05..0.95}, eta in "
                     "{0.25,0.5,0.75}"
                   : first_param_violation,
          {});
  r.check(6, "c06.predictive-ordering",
          "predictive information increasing in rho with IC >= SC >= UC",
          pred_ok,
          pred_ok ? "full grid n in 2..100, rho in {0,0.05..0.95}, eta in "
                    "{0.25,0.5,0.75}"
                  : first_pred_violation,
          {});
}

// --- criterion 7: joint-information minimizer ------------------------------

void criterion7(Runner& r) {
  const double rho_tol = 1e-3;
  const double val_tol = 1e-6 * r.opt().tolerance_scale;
  bool root_ok = true;
  double worst_rho = 0.0;
  double worst_val = 0.0;
  for (Family fam : {Family::IC, Family::SC}) {
    for (int n : {5, 10, 25}) {
      for (double eta : {0.25, 0.5, 0.75}) {
        const auto m = depnormal::joint_minimizer_rho(fam, n, eta);
        const double rho_grid = golden_min(
            [&](double rho) { return joint_at(fam, n, rho, eta); }, 1e-9,
            0.999, 1e-10);
        const double val_grid = joint_at(fam, n, rho_grid, eta);
        worst_rho = std::max(worst_rho, std::abs(m.rho0 - rho_grid));
        worst_val = std::max(worst_val, std::abs(m.min_joint - val_grid));
        if (std::abs(m.rho0 - rho_grid) > rho_tol ||
            std::abs(m.min_joint - val_grid) > val_tol) {
          root_ok = false;
        }
      }
    }
  }
  r.check(7, "c07.root-vs-grid",
          "quadratic-root minimizer matches grid minimization", root_ok,
          "IC and SC, n in {5,10,25}, eta in {0.25,0.5,0.75}",
          {{"max_abs_rho_gap", worst_rho}, {"max_abs_value_gap", worst_val}});

  bool monotone_ok = true;
  for (Family fam : {Family::IC, Family::SC}) {
    for (double eta : {0.25, 0.5, 0.75}) {
      double prev = -1.0;
      for (int n = 2; n <= 50; ++n) {
        const double v = depnormal::joint_minimizer_rho(fam, n, eta).min_joint;
        if (v < prev - 1e-12) monotone_ok = false;
        prev = v;
      }
    }
    for (int n : {5, 10, 25, 50}) {
      double prev = std::numeric_limits<double>::infinity();
      for (double eta : {0.25, 0.5, 0.75}) {
        const double v = depnormal::joint_minimizer_rho(fam, n, eta).min_joint;
        if (v > prev + 1e-12) monotone_ok = false;
        prev = v;
      }
    }
  }
  r.check(7, "c07.min-joint-monotone",
          "minimum joint information increasing in n, decreasing in eta",
          monotone_ok, "IC and SC grids", {});

  bool order_ok = true;
  for (int n : {5, 10, 25, 50}) {
    for (double eta : {0.25, 0.5, 0.75}) {
      const double mic = depnormal::joint_minimizer_rho(Family::IC, n, eta)
                             .min_joint;
      const double msc = depnormal::joint_minimizer_rho(Family::SC, n, eta)
                             .min_joint;
      if (mic > msc + 1e-12) order_ok = false;
    }
  }
  r.check(7, "c07.ic-min-below-sc-min",
          "intraclass minimum below serial minimum", order_ok,
          "matched (n, eta)", {});

  // Figure-derived reference: sample sizes for 1.5 nats of minimum joint
  // information under serial correlation.
  const double etas[] = {0.25, 0.5, 0.75};
  const int figure_n[] = {9, 25, 37};
  for (int i = 0; i < 3; ++i) {
    const auto res = depnormal::sample_size_for_info(
        Family::SC, std::nullopt, etas[i], 1.5, depnormal::Measure::joint,
        depnormal::SearchPolicy::reach);
    const bool reached = res.reachability == depnormal::Reachability::reached;
    const bool within = reached && std::abs(res.n - figure_n[i]) <= 1;
    r.check(7, std::string("c07.fig-reference-eta-") + fmt(etas[i]),
            "1.5-nat minimum-joint sample size vs figure-derived reference",
            within,
            within ? "reproduced within the +-1 figure-reading tolerance"
                   : "computed smallest sample size disagrees with the "
                     "figure-derived reference by more than 1; the computed "
                     "minimum-joint curve is authoritative here (it is "
                     "grid-verified above)",
            {{"figure_reference_n", static_cast<double>(figure_n[i])},
             {"computed_n", static_cast<double>(res.n)},
             {"min_joint_at_computed_n", res.achieved}});
  }
}

// --- criterion 8: allocation optimality ------------------------------------

void criterion8(Runner& r) {
  const double tol = 1e-9 * r.opt().tolerance_scale;
  const int grid_points = 200;

  struct Case {
    std::string id;
    double budget;
    double eta;
    std::vector<double> v_or_lambda;
    std::vector<double> z;  // empty: parameter objective
    bool prior_variance = false;
  };
  const std::vector<Case> cases = {
      {"sample-parameter-p2", 10.0, 1.0, {1.0, 0.5}, {}, false},
      {"sample-parameter-p3", 12.0, 0.7, {1.0, 0.5, 0.25}, {}, false},
      {"sample-predictive-p2", 10.0, 1.0, {1.0, 1.0}, {0.9, 0.4359}, false},
      {"sample-predictive-p3",
       15.0,
       0.5,
       {1.0, 0.8, 0.6},
       {0.6, 0.3, 0.1},
       false},
      {"prior-variance-p2", 100.0, 1.0, {1.6, 0.4}, {}, true},
      {"prior-variance-p3", 60.0, 0.8, {1.8, 0.8, 0.4}, {}, true},
  };

  for (const auto& c : cases) {
    design::AllocationResult alloc;
    std::function<double(std::span<const double>)> obj;
    if (c.prior_variance) {
      alloc = design::optimal_prior_variance_allocation(c.budget, c.eta,
                                                        c.v_or_lambda);
      obj = [&](std::span<const double> w) {
        return linmodel::detail::parameter_info_raw(c.v_or_lambda, w, c.eta);
      };
    } else if (c.z.empty()) {
      alloc = design::optimal_sample_allocation_parameter(c.budget, c.eta,
                                                          c.v_or_lambda);
      obj = [&](std::span<const double> w) {
        return linmodel::detail::parameter_info_raw(w, c.v_or_lambda, c.eta);
      };
    } else {
      alloc = design::optimal_sample_allocation_predictive(
          c.budget, c.eta, c.v_or_lambda, c.z);
      obj = [&](std::span<const double> w) {
        return linmodel::detail::predictive_info_raw(w, c.v_or_lambda, c.eta,
                                                     c.z);
      };
    }
    double budget_sum = 0.0;
    for (double w : alloc.weights) budget_sum += w;
    const double best_grid =
        grid_best(c.budget, c.v_or_lambda.size(), grid_points, obj);
    const bool ok = alloc.feasible &&
                    std::abs(budget_sum - c.budget) <= tol &&
                    alloc.objective_value >= best_grid - tol;
    std::vector<std::pair<std::string, double>> values = {
        {"objective", alloc.objective_value},
        {"grid_best", best_grid},
        {"budget_gap", std::abs(budget_sum - c.budget)}};
    for (std::size_t j = 0; j < alloc.weights.size(); ++j) {
      values.emplace_back("w" + fmt(static_cast<double>(j + 1)),
                          alloc.weights[j]);
    }
    r.check(8, "c08." + c.id, "closed-form allocation dominates grid search",
            ok, "200 grid points per dimension", values);
  }

  // Condition-index identity at the prior-variance optimum.
  const std::vector<double> spectrum = {1.6, 0.4};
  const auto alloc =
      design::optimal_prior_variance_allocation(100.0, 1.0, spectrum);
  const auto residuals =
      design::condition_index_residuals(spectrum, alloc.weights, 1.0);
  double worst = 0.0;
  for (double d : residuals) worst = std::max(worst, std::abs(d));
  r.check(8, "c08.condition-index-identity",
          "condition-index representation of the optimal prior variances",
          worst <= tol, "(l1 v1 + eta)/(lj vj + eta) = l1/lj",
          {{"max_abs_residual", worst}});
}

// --- criterion 9: two-cell design example ----------------------------------

void criterion9(Runner& r) {
  const double tol = 1e-9 * r.opt().tolerance_scale;
  const std::vector<double> v0 = {1.0, 1.0};
  const auto alloc = design::optimal_sample_allocation_parameter(10.0, 1.0, v0);
  const bool equal_split = alloc.feasible &&
                           std::abs(alloc.weights[0] - 5.0) <= tol &&
                           std::abs(alloc.weights[1] - 5.0) <= tol;
  const double best_grid = grid_best(
      10.0, 2, 200, [&](std::span<const double> w) {
        return linmodel::detail::parameter_info_raw(w, v0, 1.0);
      });
  r.check(9, "c09.balanced-design-optimal",
          "equal split maximizes parameter information",
          equal_split && alloc.objective_value >= best_grid - tol,
          "two cells, n=10, eta=1, unit prior variances",
          {{"w1", alloc.weights[0]},
           {"w2", alloc.weights[1]},
           {"objective", alloc.objective_value},
           {"grid_best", best_grid}});

  // Sweep unit-norm prediction directions.
  linmodel::LinearModelSpec balanced;
  balanced.eigenvalues = {5.0, 5.0};
  balanced.prior_variances = v0;
  balanced.eta = 1.0;
  const double param = linmodel::parameter_info(balanced);
  const double diag = 1.0 / std::sqrt(2.0);
  const std::vector<double> zdiag = {diag, diag};
  const double pred_at_diag_fixed = linmodel::predictive_info(balanced, zdiag);
  const double pred_opt_at_diag =
      design::optimal_sample_allocation_predictive(10.0, 1.0, v0, zdiag)
          .objective_value;

  bool dominated = true;       // predictive <= parameter everywhere
  bool diag_min_fixed = true;  // balanced design: minimum at the diagonal
  bool diag_min_opt = true;    // per-direction optimal design: same
  for (int i = 0; i <= 500; ++i) {
    const double z1 = static_cast<double>(i) / 500.0;
    const double z2 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
    const std::vector<double> z = {z1, z2};
    const double pred_fixed = linmodel::predictive_info(balanced, z);
    if (pred_fixed > param + 1e-12) dominated = false;
    if (pred_fixed < pred_at_diag_fixed - 1e-12) diag_min_fixed = false;
    const auto opt =
        design::optimal_sample_allocation_predictive(10.0, 1.0, v0, z);
    if (opt.objective_value > param + 1e-12) dominated = false;
    if (opt.objective_value < pred_opt_at_diag - 1e-12) diag_min_opt = false;
  }
  r.check(9, "c09.predictive-below-parameter",
          "predictive information never exceeds parameter information",
          dominated, "unit-norm direction sweep, 501 points", {});
  r.check(9, "c09.least-informative-direction",
          "prediction at the diagonal is the least informative direction",
          diag_min_fixed && diag_min_opt,
          "holds both for the balanced design and for the per-direction "
          "optimal designs",
          {{"predictive_at_diagonal_balanced", pred_at_diag_fixed},
           {"predictive_at_diagonal_optimal", pred_opt_at_diag},
           {"parameter_info", param}});

  // Monte Carlo oracle agreement for both linear-model measures.
  oracle::MonteCarloSettings mc;
  mc.seed = r.opt().seed;
  mc.replications = 100000;
  const auto mc_param = oracle::mi_montecarlo_linmodel(
      balanced, zdiag, oracle::MiTarget::parameter, mc);
  const auto mc_pred = oracle::mi_montecarlo_linmodel(
      balanced, zdiag, oracle::MiTarget::predictive, mc);
  const bool param_ok =
      std::abs(mc_param.estimate - param) <= 3.0 * mc_param.standard_error;
  const bool pred_ok = std::abs(mc_pred.estimate - pred_at_diag_fixed) <=
                       3.0 * mc_pred.standard_error;
  r.check(9, "c09.mc-oracle-agreement",
          "closed forms match the generative Monte Carlo oracle",
          param_ok && pred_ok, "balanced design, diagonal direction",
          {{"parameter_closed", param},
           {"parameter_mc", mc_param.estimate},
           {"parameter_mc_se", mc_param.standard_error},
           {"predictive_closed", pred_at_diag_fixed},
           {"predictive_mc", mc_pred.estimate},
           {"predictive_mc_se", mc_pred.standard_error}});
}

// --- criterion 10: order-statistics joint optimum ---------------------------

void criterion10(Runner& r) {
  const tte::GammaPriorSpec prior{0.5, 1.0};
  const int n = 26;
  const int argmax = orderstats::argmax_joint_r(n, prior);
  std::vector<std::pair<std::string, double>> values;
  values.emplace_back("figure_reference_r", 17.0);
  values.emplace_back("computed_argmax_r", static_cast<double>(argmax));
  for (int rr = 1; rr < n; ++rr) {
    values.emplace_back(
        "joint_r" + fmt(rr),
        orderstats::joint_info_next_order_stat({n, rr}, prior).joint);
  }
  r.check(10, "c10.joint-argmax",
          "argmax of joint information over the censoring index",
          argmax >= 16 && argmax <= 18,
          "n=26, prior shape 0.5; full curve emitted for audit", values);
}

}  // namespace

int Report::failures() const {
  int k = 0;
  for (const auto& e : entries) k += e.status == Status::fail ? 1 : 0;
  return k;
}

int Report::expected_mismatches() const {
  int k = 0;
  for (const auto& e : entries) {
    k += e.status == Status::expected_mismatch ? 1 : 0;
  }
  return k;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::expected_mismatch: return "expected_mismatch";
  }
  return "unknown";
}

Report run(const Options& options) {
  if (!(options.tolerance_scale > 0.0)) {
    throw std::invalid_argument("tolerance scale must be positive");
  }
  Runner runner(options);
  runner.report_.options = options;
  criterion1(runner);
  criterion2(runner);
  criterion3(runner);
  criterion4(runner);
  criterion5(runner);
  criterion6(runner);
  criterion7(runner);
  criterion8(runner);
  criterion9(runner);
  criterion10(runner);
  return std::move(runner).finish();
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["seed"] = report.options.seed;
  j["tolerance_scale"] = report.options.tolerance_scale;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json je;
    je["criterion"] = e.criterion;
    je["id"] = e.id;
    je["name"] = e.name;
    je["status"] = status_name(e.status);
    je["detail"] = e.detail;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e.values) values[k] = v;
    je["values"] = values;
    j["checks"].push_back(je);
  }
  j["summary"] = {
      {"total", report.entries.size()},
      {"failures", report.failures()},
      {"expected_mismatches", report.expected_mismatches()},
      {"ok", report.ok()},
  };
  return j.dump(2) + "\n";
}

}  // namespace sampinfo::verify

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

#include "depnormal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gaussmi.hpp"

namespace sampinfo::depnormal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_nonneg(double x) { return x < 0.0 ? 0.0 : x; }

// Marginal autocorrelation of the location-plus-noise sequence at lag k,
// given the conditional correlation at that lag.
double marginal_corr(double cond_corr, double eta) {
  return (1.0 + eta * cond_corr) / (1.0 + eta);
}

// Squared multiple correlation of one variable on m others when every
// pairwise correlation equals r.
double equicorrelated_r2(int m, double r) {
  return static_cast<double>(m) * r * r / (1.0 + (m - 1) * r);
}

struct Quadratic {
  double a, b, c;
};

Quadratic minimizer_coefficients(Family family, int n, double eta) {
  const double inv_eta = 1.0 / eta;
  const double nn = static_cast<double>(n);
  if (family == Family::IC) {
    return {nn - 1.0, 2.0 * (1.0 + nn * inv_eta), (1.0 - nn) * inv_eta};
  }
  // SC
  return {1.0 + (2.0 - nn) * inv_eta, 1.0 + (2.0 * nn - 1.0) * inv_eta,
          (1.0 - nn) * inv_eta};
}

double joint_value(Family family, int n, double rho, double eta) {
  DepNormalSpec s{family, rho, n, eta};
  const linmodel::InfoTriple t = joint_info(s);
  return t.joint;
}

}  // namespace

void DepNormalSpec::validate() const {
  if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("eta must be positive");
  }
  if (family != Family::UC) {
    if (!(rho >= 0.0) || rho >= 1.0) {
      throw std::invalid_argument("rho must lie in [0, 1)");
    }
  }
}

double t_n(const DepNormalSpec& spec) {
  spec.validate();
  const double nn = spec.n;
  switch (spec.family) {
    case Family::UC:
      return nn;
    case Family::IC:
      return nn / (1.0 + (nn - 1.0) * spec.rho);
    case Family::SC:
      return (nn - (nn - 2.0) * spec.rho) / (1.0 + spec.rho);
  }
  throw std::invalid_argument("unknown family");
}

double parameter_info(const DepNormalSpec& spec) {
  return 0.5 * std::log1p(t_n(spec) / spec.eta);
}

double conditional_dependence_info(const DepNormalSpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::UC:
      return 0.0;
    case Family::IC:
      return gaussmi::mi_from_multiple_correlation(
          equicorrelated_r2(spec.n, spec.rho));
    case Family::SC:
      return gaussmi::mi_from_multiple_correlation(spec.rho * spec.rho);
  }
  throw std::invalid_argument("unknown family");
}

std::vector<double> sc_prediction_error_variances(int n, double rho,
                                                  double eta) {
  if (n < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0;
  double rk = 1.0;
  for (int k = 1; k <= n; ++k) {
    rk *= rho;
    t[static_cast<std::size_t>(k)] = marginal_corr(rk, eta);
  }
  std::vector<double> pev(static_cast<std::size_t>(n));
  std::vector<double> a(static_cast<std::size_t>(n), 0.0);
  std::vector<double> a_prev(static_cast<std::size_t>(n), 0.0);
  a[0] = t[1];
  double e = 1.0 - t[1] * t[1];
  pev[0] = e;
  for (int m = 2; m <= n; ++m) {
    std::swap(a, a_prev);
    double acc = t[static_cast<std::size_t>(m)];
    for (int j = 1; j < m; ++j) {
      acc -= a_prev[static_cast<std::size_t>(j - 1)] *
             t[static_cast<std::size_t>(m - j)];
    }
    const double k = acc / e;
    a[static_cast<std::size_t>(m - 1)] = k;
    for (int j = 1; j < m; ++j) {
      a[static_cast<std::size_t>(j - 1)] =
          a_prev[static_cast<std::size_t>(j - 1)] -
          k * a_prev[static_cast<std::size_t>(m - 1 - j)];
    }
    e *= (1.0 - k * k);
    pev[static_cast<std::size_t>(m - 1)] = e;
  }
  return pev;
}

double predictive_info(const DepNormalSpec& spec) {
  spec.validate();
  const double eta = spec.eta;
  switch (spec.family) {
    case Family::UC: {
      const double r2 =
          spec.n / ((1.0 + eta) * (spec.n + eta));
      return gaussmi::mi_from_multiple_correlation(r2);
    }
    case Family::IC: {
      const double rho_p = gaussmi::predictive_correlation(spec.rho, eta);
      return gaussmi::mi_from_multiple_correlation(
          equicorrelated_r2(spec.n, rho_p));
    }
    case Family::SC: {
      const auto pev = sc_prediction_error_variances(spec.n, spec.rho, eta);
      return clamp_nonneg(-0.5 * std::log(pev.back()));
    }
  }
  throw std::invalid_argument("unknown family");
}

double predictive_info_one_step(const DepNormalSpec& spec) {
  spec.validate();
  const double cond = spec.family == Family::UC ? 0.0 : spec.rho;
  const double rho_p = gaussmi::predictive_correlation(cond, spec.eta);
  return gaussmi::mi_from_multiple_correlation(rho_p * rho_p);
}

linmodel::InfoTriple joint_info(const DepNormalSpec& spec) {
  linmodel::InfoTriple t;
  t.parameter = parameter_info(spec);
  t.dependence = conditional_dependence_info(spec);
  t.joint = t.parameter + t.dependence;
  t.predictive = predictive_info(spec);
  return t;
}

JointMinimizer joint_minimizer_rho(Family family, int n, double eta) {
  if (family == Family::UC) {
    throw std::invalid_argument("joint minimizer applies to IC and SC only");
  }
  if (n < 2) throw std::invalid_argument("joint minimizer requires n >= 2");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");

  const auto [A, B, C] = minimizer_coefficients(family, n, eta);
  JointMinimizer out;
  double root = -1.0;
  if (std::abs(A) < 1e-14) {
    root = -C / B;
  } else {
    const double disc = B * B - 4.0 * A * C;
    if (disc >= 0.0) {
      const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
      const double r1 = q / A;
      const double r2 = C / q;
      for (double r : {r1, r2}) {
        if (r > 0.0 && r < 1.0) root = r;
      }
    }
  }
  if (root > 0.0 && root < 1.0) {
    out.rho0 = root;
    out.min_joint = joint_value(family, n, root, eta);
    out.interior = true;
    return out;
  }
  // No stationary point inside (0, 1): report the better boundary.
  out.interior = false;
  const double at_zero = joint_value(family, n, 0.0, eta);
  const double near_one = joint_value(family, n, 1.0 - 1e-9, eta);
  if (at_zero <= near_one) {
    out.rho0 = 0.0;
    out.min_joint = at_zero;
  } else {
    out.rho0 = 1.0;
    out.min_joint = near_one;
  }
  return out;
}

double measure_supremum(Family family, std::optional<double> rho, double eta,
                        Measure m) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (!rho) {
    // Joint information minimized over rho at each n.
    if (m != Measure::joint || family == Family::UC) {
      throw std::invalid_argument(
          "rho-minimized searches apply to the joint measure of IC/SC");
    }
    if (family == Family::SC) return kInf;
    // IC: the minimizing rho tends to the positive root of
    // rho^2 + (2/eta) rho - 1/eta = 0.
    const double inv_eta = 1.0 / eta;
    const double rinf = -inv_eta + std::sqrt(inv_eta * inv_eta + inv_eta);
    return 0.5 * std::log1p(1.0 / (rinf * eta)) - 0.5 * std::log1p(-rinf);
  }
  const double r = family == Family::UC ? 0.0 : *rho;
  switch (m) {
    case Measure::parameter:
      if (family == Family::IC && r > 0.0) {
        return 0.5 * std::log1p(1.0 / (r * eta));
      }
      return kInf;
    case Measure::predictive: {
      // Limiting prediction error variance over the marginal variance.
      double lim;
      switch (family) {
        case Family::UC: lim = eta / (1.0 + eta); break;
        case Family::IC: lim = eta * (1.0 - r) / (1.0 + eta); break;
        case Family::SC: lim = eta * (1.0 - r * r) / (1.0 + eta); break;
        default: throw std::invalid_argument("unknown family");
      }
      return -0.5 * std::log(lim);
    }
    case Measure::joint:
      if (family == Family::IC && r > 0.0) {
        return 0.5 * std::log1p(1.0 / (r * eta)) - 0.5 * std::log1p(-r);
      }
      return kInf;
  }
  throw std::invalid_argument("unknown measure");
}

SampleSizeResult sample_size_for_info(Family family, std::optional<double> rho,
                                      double eta, double target, Measure m,
                                      SearchPolicy policy, int n_cap) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw std::invalid_argument("target must be positive and finite");
  }
  if (n_cap < 2) throw std::invalid_argument("search cap too small");
  const double sup = measure_supremum(family, rho, eta, m);

  SampleSizeResult out;
  out.supremum = sup;
  if (std::isfinite(sup) && target > sup - 1e-12 * std::max(1.0, sup)) {
    out.reachability = Reachability::unreachable;
    return out;
  }

  const bool minimized = !rho.has_value();
  const int n_min = minimized ? 2 : 1;

  // Streaming Levinson state for the SC predictive search.
  std::vector<double> pev;
  if (!minimized && family == Family::SC && m == Measure::predictive) {
    pev = sc_prediction_error_variances(n_cap, rho.value_or(0.0), eta);
  }

  auto value_at = [&](int n) -> double {
    if (minimized) return joint_minimizer_rho(family, n, eta).min_joint;
    DepNormalSpec s{family, family == Family::UC ? 0.0 : *rho, n, eta};
    switch (m) {
      case Measure::parameter: return parameter_info(s);
      case Measure::predictive:
        if (family == Family::SC) {
          return clamp_nonneg(-0.5 *
                              std::log(pev[static_cast<std::size_t>(n - 1)]));
        }
        return predictive_info(s);
      case Measure::joint: return joint_info(s).joint;
    }
    throw std::invalid_argument("unknown measure");
  };

  double prev = -kInf;
  for (int n = n_min; n <= n_cap; ++n) {
    const double v = value_at(n);
    if (v >= target) {
      out.reachability = Reachability::reached;
      out.n = n;
      out.achieved = v;
      if (policy == SearchPolicy::nearest && n > n_min &&
          std::abs(prev - target) < std::abs(v - target)) {
        out.n = n - 1;
        out.achieved = prev;
      }
      return out;
    }
    prev = v;
  }
  out.reachability = Reachability::cap_exceeded;
  out.n = n_cap;
  out.achieved = prev;
  return out;
}

}  // namespace sampinfo::depnormal

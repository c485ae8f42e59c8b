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

// Command-line front end. Links only the public C API; every number it
// prints comes through sampinfo.h. Output is data (CSV or JSON rows), one
// table per invocation, with a fixed column order per table and
// locale-independent formatting.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sampinfo.h"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitVerifyMismatch = 3;
constexpr double kLn2 = 0.69314718055994530941723;

// ---- failure handling ------------------------------------------------------

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(sampinfo_status s) {
  if (s != SAMPINFO_OK) {
    fail(kExitValidation, std::string(sampinfo_strerror(s)) + ": " +
                              sampinfo_last_error());
  }
}

// ---- table model -----------------------------------------------------------

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::set<std::string> info_columns;  // rescaled by --unit bits
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void emit(const Table& t, const std::string& format, const std::string& unit,
          std::ostream& os) {
  const double scale = unit == "bits" ? 1.0 / kLn2 : 1.0;
  auto scaled = [&](std::size_t col, const Cell& c) -> Cell {
    if (std::holds_alternative<double>(c) &&
        t.info_columns.count(t.columns[col]) > 0) {
      return std::get<double>(c) * scale;
    }
    return c;
  };
  if (format == "csv") {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      os << (i ? "," : "") << t.columns[i];
    }
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Cell c = scaled(i, row[i]);
        os << (i ? "," : "");
        if (std::holds_alternative<double>(c)) {
          os << format_double(std::get<double>(c));
        } else {
          os << std::get<std::string>(c);
        }
      }
      os << "\n";
    }
  } else {  // json
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        const Cell c = scaled(i, row[i]);
        if (std::holds_alternative<double>(c)) {
          const double v = std::get<double>(c);
          if (std::isfinite(v)) {
            obj[t.columns[i]] = v;
          } else {
            obj[t.columns[i]] = format_double(v);
          }
        } else {
          obj[t.columns[i]] = std::get<std::string>(c);
        }
      }
      rows.push_back(obj);
    }
    os << rows.dump(2) << "\n";
  }
}

void write_output(const Table& t, const std::string& format,
                  const std::string& unit, const std::string& out_path) {
  if (out_path.empty()) {
    emit(t, format, unit, std::cout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) fail(kExitValidation, "cannot open output file: " + out_path);
  emit(t, format, unit, f);
}

// ---- argument helpers --------------------------------------------------------

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(kExitValidation,
           std::string("cannot parse ") + what + " entry: " + item);
    }
  }
  if (out.empty()) fail(kExitValidation, std::string("empty list for ") + what);
  return out;
}

sampinfo_dep_family parse_family(const std::string& s) {
  if (s == "uc") return SAMPINFO_DEP_UC;
  if (s == "ic") return SAMPINFO_DEP_IC;
  if (s == "sc") return SAMPINFO_DEP_SC;
  fail(kExitValidation, "unknown family: " + s + " (expected uc|ic|sc)");
}

sampinfo_tte_transform parse_transform(const std::string& s) {
  if (s == "exponential") return SAMPINFO_TTE_EXPONENTIAL;
  if (s == "weibull") return SAMPINFO_TTE_WEIBULL;
  if (s == "pareto1") return SAMPINFO_TTE_PARETO1;
  if (s == "extreme-value") return SAMPINFO_TTE_EXTREME_VALUE;
  fail(kExitValidation, "unknown transform: " + s);
}

// Common options shared by every subcommand.
struct CommonOpts {
  std::string out;
  std::string format = "csv";
  std::string unit = "nats";
  std::uint64_t seed = 0;
  std::string config;
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--out", c.out, "output file (default: stdout)");
  sub->add_option("--format", c.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--unit", c.unit, "nats|bits")
      ->check(CLI::IsMember({"nats", "bits"}));
  sub->add_option("--seed", c.seed, "random seed for oracle-backed columns");
  sub->add_option("--config", c.config,
                  "JSON config file; explicit flags win on conflict");
}

// JSON config support: config entries are rewritten as long flags placed
// before the user's own flags, so explicit flags win (options take the
// last occurrence).
std::vector<std::string> config_tokens(const CLI::App* sub,
                                       const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(kExitValidation, "cannot open config file: " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const std::exception& e) {
    fail(kExitValidation, std::string("config parse error: ") + e.what());
  }
  if (!j.is_object()) fail(kExitValidation, "config must be a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    const CLI::Option* opt = nullptr;
    for (const auto* o : sub->get_options()) {
      if (o->check_name(flag)) {
        opt = o;
        break;
      }
    }
    if (opt == nullptr) {
      fail(kExitValidation, "unknown config key: " + key);
    }
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag);
      continue;
    }
    tokens.push_back(flag);
    if (value.is_string()) {
      tokens.push_back(value.get<std::string>());
    } else if (value.is_array()) {
      std::string joined;
      for (const auto& item : value) {
        if (!joined.empty()) joined += ",";
        joined += item.is_string() ? item.get<std::string>()
                                   : nlohmann::json(item).dump();
      }
      tokens.push_back(joined);
    } else {
      tokens.push_back(value.dump());
    }
  }
  return tokens;
}

// ---- subcommand state ----------------------------------------------------

struct LinmodelOpts {
  CommonOpts common;
  std::string eigenvalues;
  std::string prior_variances;
  double eta = 1.0;
  std::string z;
  int sweep = -1;
  std::string design = "fixed";  // fixed | predictive-opt
  double budget = 0.0;
  double w1 = -1.0;
  double w2 = -1.0;
};

struct DesignOpts {
  CommonOpts common;
  std::string mode;  // sample-param | sample-pred | prior-var
  double budget = 0.0;
  double eta = 1.0;
  std::string prior_variances;
  std::string lambda;
  std::string z;
  bool round = false;
  int kappa_sweep = -1;
  double kappa_max = 10.0;
};

struct TteOpts {
  CommonOpts common;
  std::string table = "decomposition";
  std::string alpha = "1";
  double beta = 1.0;
  int n = -1;
  int n_max = -1;
  double s = -1.0;
  std::string transform = "exponential";
  double transform_param = 1.0;
  std::string data;
};

struct DepOpts {
  CommonOpts common;
  std::string table = "curves";
  std::string family = "uc";
  double rho = 0.0;
  double eta = 1.0;
  int n = -1;
  int n_max = -1;
  int rho_steps = 19;
  double target = 1.0;
  std::string measure = "parameter";
  std::string policy = "reach";
  bool minimize_rho = false;
};

struct OrderOpts {
  CommonOpts common;
  std::string table = "info";
  int n = 26;
  std::string alpha = "1";
  double beta = 1.0;
  long long mc_reps = 0;
};

struct VerifyOpts {
  CommonOpts common;
  double tol_scale = 1.0;
};

// ---- linmodel --------------------------------------------------------------

struct LinmodelHandle {
  sampinfo_linmodel* h = nullptr;
  ~LinmodelHandle() { sampinfo_linmodel_destroy(h); }
};

int run_linmodel(const LinmodelOpts& o) {
  const auto lambda = parse_list(o.eigenvalues, "--eigenvalues");
  const auto v0 = parse_list(o.prior_variances, "--prior-variances");
  const std::size_t p = lambda.size();

  Table t;
  t.columns = {"z1", "z2", "parameter", "parameter_per_dim",
               "predictive", "joint", "dependence"};
  t.info_columns = {"parameter", "parameter_per_dim", "predictive", "joint",
                    "dependence"};

  auto eval_point = [&](const std::vector<double>& lam,
                        const std::vector<double>& z) {
    LinmodelHandle m;
    check(sampinfo_linmodel_create(lam.data(), v0.data(), p, o.eta, &m.h));
    sampinfo_info_triple triple{};
    check(sampinfo_linmodel_joint_info(m.h, z.data(), z.size(), &triple));
    t.add_row({z[0], z.size() > 1 ? Cell{z[1]} : Cell{0.0}, triple.parameter,
               triple.parameter / static_cast<double>(p), triple.predictive,
               triple.joint, triple.dependence});
  };

  if (o.sweep >= 0) {
    if (p != 2) fail(kExitValidation, "--sweep requires a 2-dimensional model");
    for (int i = 1; i <= o.sweep; ++i) {
      const double z1 = static_cast<double>(i - 1) / (o.sweep > 1 ? o.sweep - 1 : 1);
      const double z2 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
      const std::vector<double> z = {z1, z2};
      if (o.design == "predictive-opt") {
        if (!(o.budget > 0.0)) {
          fail(kExitValidation, "--design predictive-opt requires --budget");
        }
        std::vector<double> weights(p);
        sampinfo_allocation_info info{};
        check(sampinfo_design_sample_allocation_predictive(
            o.budget, o.eta, v0.data(), z.data(), p, weights.data(), &info));
        eval_point(weights, z);
      } else {
        eval_point(lambda, z);
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.z.empty()) fail(kExitValidation, "need --z or --sweep");
  const auto z = parse_list(o.z, "--z");

  if (o.w1 >= 0.0 || o.w2 >= 0.0) {
    const double w1 = std::max(o.w1, 0.0);
    const double w2 = std::max(o.w2, 0.0);
    LinmodelHandle m;
    check(sampinfo_linmodel_create(lambda.data(), v0.data(), p, o.eta, &m.h));
    sampinfo_weighted_utility u{};
    check(sampinfo_linmodel_weighted_utility(m.h, z.data(), z.size(), w1, w2,
                                             &u));
    Table wt;
    wt.columns = {"w1", "w2", "parameter", "predictive", "conditional_term",
                  "utility", "utility_regrouped"};
    wt.info_columns = {"parameter", "predictive", "conditional_term",
                       "utility", "utility_regrouped"};
    wt.add_row({w1, w2, u.parameter, u.predictive, u.conditional_term,
                u.utility,
                w1 * u.conditional_term + (w1 + w2) * u.predictive});
    write_output(wt, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  eval_point(lambda, z);
  write_output(t, o.common.format, o.common.unit, o.common.out);
  return 0;
}

// ---- design ------------------------------------------------------------------

int run_design(const DesignOpts& o) {
  if (o.kappa_sweep >= 0) {
    // Parameter information against the condition number for three prior
    // variance schemes (p = 2, trace-normalized spectrum).
    if (!(o.budget > 0.0)) fail(kExitValidation, "--budget required");
    Table t;
    t.columns = {"kappa", "scheme", "parameter_info", "theta1_info"};
    t.info_columns = {"parameter_info", "theta1_info"};
    const int steps = std::max(o.kappa_sweep, 1);
    for (int i = 0; i <= steps; ++i) {
      const double kappa =
          1.0 + (o.kappa_max - 1.0) * static_cast<double>(i) / steps;
      const double k2 = kappa * kappa;
      const std::vector<double> lam = {2.0 * k2 / (1.0 + k2),
                                       2.0 / (1.0 + k2)};
      std::vector<std::pair<std::string, std::vector<double>>> schemes;
      std::vector<double> opt(2);
      sampinfo_allocation_info info{};
      check(sampinfo_design_prior_variance_allocation(
          o.budget, o.eta, lam.data(), 2, opt.data(), &info));
      schemes.emplace_back("optimal", opt);
      schemes.emplace_back("orthogonal",
                           std::vector<double>{o.budget / 2, o.budget / 2});
      const double inv_sum = 1.0 / lam[0] + 1.0 / lam[1];
      schemes.emplace_back("gprior",
                           std::vector<double>{
                               o.budget / (lam[0] * inv_sum),
                               o.budget / (lam[1] * inv_sum)});
      for (const auto& [name, v] : schemes) {
        LinmodelHandle m;
        check(sampinfo_linmodel_create(lam.data(), v.data(), 2, o.eta, &m.h));
        double param = 0.0;
        check(sampinfo_linmodel_parameter_info(m.h, &param));
        // Information about the best-identified rotated component.
        double theta1 = 0.0;
        {
          LinmodelHandle m1;
          const double l1 = lam[0];
          const double v1 = v[0];
          check(sampinfo_linmodel_create(&l1, &v1, 1, o.eta, &m1.h));
          check(sampinfo_linmodel_parameter_info(m1.h, &theta1));
        }
        t.add_row({kappa, name, param, theta1});
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (!(o.budget > 0.0)) fail(kExitValidation, "--budget required");
  std::vector<double> weights;
  sampinfo_allocation_info info{};
  std::vector<double> v0;
  std::vector<double> lam;
  std::vector<double> z;
  if (o.mode == "sample-param" || o.mode == "sample-pred") {
    if (o.prior_variances.empty()) {
      fail(kExitValidation, "--prior-variances required");
    }
    v0 = parse_list(o.prior_variances, "--prior-variances");
    weights.resize(v0.size());
    if (o.mode == "sample-param") {
      check(sampinfo_design_sample_allocation_parameter(
          o.budget, o.eta, v0.data(), v0.size(), weights.data(), &info));
    } else {
      if (o.z.empty()) fail(kExitValidation, "--z required for sample-pred");
      z = parse_list(o.z, "--z");
      if (z.size() != v0.size()) fail(kExitValidation, "--z length mismatch");
      check(sampinfo_design_sample_allocation_predictive(
          o.budget, o.eta, v0.data(), z.data(), v0.size(), weights.data(),
          &info));
    }
  } else if (o.mode == "prior-var") {
    if (o.lambda.empty()) fail(kExitValidation, "--lambda required");
    lam = parse_list(o.lambda, "--lambda");
    weights.resize(lam.size());
    check(sampinfo_design_prior_variance_allocation(
        o.budget, o.eta, lam.data(), lam.size(), weights.data(), &info));
  } else {
    fail(kExitValidation,
         "unknown --mode (expected sample-param|sample-pred|prior-var)");
  }

  std::vector<double> rounded;
  double rounded_obj = 0.0;
  if (o.round) {
    if (o.mode == "prior-var") {
      fail(kExitValidation, "--round applies to sample allocations");
    }
    rounded.resize(weights.size());
    check(sampinfo_design_round_sample_allocation(
        o.budget, o.eta, v0.data(), z.empty() ? nullptr : z.data(), v0.size(),
        weights.data(), rounded.data(), &rounded_obj));
  }

  Table t;
  t.columns = {"component", "weight", "objective", "feasible",
               "binding_minimum", "continuous", "used_fallback"};
  t.info_columns = {"objective"};
  if (o.round) {
    t.columns.push_back("rounded_weight");
    t.columns.push_back("rounded_objective");
    t.info_columns.insert("rounded_objective");
  }
  for (std::size_t j = 0; j < weights.size(); ++j) {
    std::vector<Cell> row = {static_cast<double>(j + 1),
                             weights[j],
                             info.objective_value,
                             static_cast<double>(info.feasible),
                             info.binding_minimum,
                             static_cast<double>(info.continuous),
                             static_cast<double>(info.used_fallback)};
    if (o.round) {
      row.emplace_back(rounded[j]);
      row.emplace_back(rounded_obj);
    }
    t.add_row(std::move(row));
  }
  write_output(t, o.common.format, o.common.unit, o.common.out);
  return 0;
}

// ---- tte ----------------------------------------------------------------------

int run_tte(const TteOpts& o) {
  const auto alphas = parse_list(o.alpha, "--alpha");

  if (o.table == "decomposition") {
    const int n_max = o.n_max > 0 ? o.n_max : (o.n > 0 ? o.n : 25);
    Table t;
    t.columns = {"alpha", "n", "parameter", "predictive", "parameter_shifted",
                 "identity_residual"};
    t.info_columns = {"parameter", "predictive", "parameter_shifted",
                      "identity_residual"};
    for (double a : alphas) {
      for (int n = 0; n <= n_max; ++n) {
        double param = 0.0;
        double pred = 0.0;
        double shifted = 0.0;
        double residual = 0.0;
        check(sampinfo_tte_decomposition(a, n, &param, &pred, &shifted,
                                         &residual));
        t.add_row({a, static_cast<double>(n), param, pred, shifted, residual});
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "censoring") {
    const int n = o.n > 0 ? o.n : 25;
    Table t;
    t.columns = {"alpha", "n", "r", "param_loss", "predictive_loss"};
    t.info_columns = {"param_loss", "predictive_loss"};
    for (double a : alphas) {
      for (int r = 1; r <= n; ++r) {
        double pl = 0.0;
        double ql = 0.0;
        check(sampinfo_tte_censoring_loss(a, n, r, &pl, &ql));
        t.add_row({a, static_cast<double>(n), static_cast<double>(r), pl, ql});
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "observed") {
    if (o.n < 0 || o.s < 0.0) {
      fail(kExitValidation, "--n and --s required for the observed table");
    }
    Table t;
    t.columns = {"alpha", "beta", "n", "s_n", "observed_parameter",
                 "observed_predictive"};
    t.info_columns = {"observed_parameter", "observed_predictive"};
    for (double a : alphas) {
      double op = 0.0;
      double oq = 0.0;
      check(sampinfo_tte_observed_parameter_info(a, o.beta, o.n, o.s, &op));
      check(sampinfo_tte_observed_predictive_info(a, o.beta, o.n, o.s, &oq));
      t.add_row({a, o.beta, static_cast<double>(o.n), o.s, op, oq});
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "suffstat") {
    if (o.data.empty()) fail(kExitValidation, "--data required for suffstat");
    const auto data = parse_list(o.data, "--data");
    double s = 0.0;
    check(sampinfo_tte_suff_stat(parse_transform(o.transform),
                                 o.transform_param, data.data(), data.size(),
                                 &s));
    Table t;
    t.columns = {"transform", "n", "s_n"};
    t.add_row({o.transform, static_cast<double>(data.size()), s});
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  fail(kExitValidation, "unknown --table for tte: " + o.table);
}

// ---- dep ----------------------------------------------------------------------

struct DepHandle {
  sampinfo_depmodel* h = nullptr;
  ~DepHandle() { sampinfo_depmodel_destroy(h); }
};

int run_dep(const DepOpts& o) {
  const sampinfo_dep_family family = parse_family(o.family);

  if (o.table == "curves") {
    const int n_max = o.n_max > 0 ? o.n_max : (o.n > 0 ? o.n : 30);
    Table t;
    t.columns = {"family", "rho", "eta", "n", "t_n", "parameter",
                 "predictive", "predictive_one_step",
                 "conditional_dependence", "joint"};
    t.info_columns = {"parameter", "predictive", "predictive_one_step",
                      "conditional_dependence", "joint"};
    for (int n = 1; n <= n_max; ++n) {
      DepHandle m;
      check(sampinfo_depmodel_create(family, o.rho, n, o.eta, &m.h));
      double tn = 0.0;
      double one_step = 0.0;
      sampinfo_info_triple triple{};
      check(sampinfo_depmodel_t_n(m.h, &tn));
      check(sampinfo_depmodel_predictive_info_one_step(m.h, &one_step));
      check(sampinfo_depmodel_joint_info(m.h, &triple));
      t.add_row({o.family, o.rho, o.eta, static_cast<double>(n), tn,
                 triple.parameter, triple.predictive, one_step,
                 triple.dependence, triple.joint});
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "joint") {
    if (o.n <= 0) fail(kExitValidation, "--n required for the joint table");
    Table t;
    t.columns = {"family", "eta", "n", "rho", "rho_sq", "parameter",
                 "conditional_dependence", "joint"};
    t.info_columns = {"parameter", "conditional_dependence", "joint"};
    const int steps = std::max(o.rho_steps, 1);
    for (int i = 0; i <= steps; ++i) {
      const double rho = 0.95 * static_cast<double>(i) / steps;
      DepHandle m;
      check(sampinfo_depmodel_create(family, rho, o.n, o.eta, &m.h));
      sampinfo_info_triple triple{};
      check(sampinfo_depmodel_joint_info(m.h, &triple));
      t.add_row({o.family, o.eta, static_cast<double>(o.n), rho, rho * rho,
                 triple.parameter, triple.dependence, triple.joint});
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "minjoint") {
    const int n_max = o.n_max > 0 ? o.n_max : 40;
    Table t;
    t.columns = {"family", "eta", "n", "rho0", "min_joint", "interior"};
    t.info_columns = {"min_joint"};
    for (int n = 2; n <= n_max; ++n) {
      double rho0 = 0.0;
      double mj = 0.0;
      int interior = 0;
      check(sampinfo_dep_joint_minimizer(family, n, o.eta, &rho0, &mj,
                                         &interior));
      t.add_row({o.family, o.eta, static_cast<double>(n), rho0, mj,
                 static_cast<double>(interior)});
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "samplesize") {
    sampinfo_dep_measure measure;
    if (o.measure == "parameter") {
      measure = SAMPINFO_MEASURE_PARAMETER;
    } else if (o.measure == "predictive") {
      measure = SAMPINFO_MEASURE_PREDICTIVE;
    } else if (o.measure == "joint") {
      measure = SAMPINFO_MEASURE_JOINT;
    } else {
      fail(kExitValidation, "unknown --measure: " + o.measure);
    }
    const sampinfo_search_policy policy = o.policy == "nearest"
                                              ? SAMPINFO_SEARCH_NEAREST
                                              : SAMPINFO_SEARCH_REACH;
    sampinfo_sample_size_result res{};
    check(sampinfo_dep_sample_size(family, o.minimize_rho ? 1 : 0, o.rho,
                                   o.eta, o.target, measure, policy, &res));
    Table t;
    t.columns = {"family", "rho", "eta", "measure", "target", "status", "n",
                 "achieved", "supremum"};
    t.info_columns = {"target", "achieved", "supremum"};
    const char* status = res.reachability == 0
                             ? "reached"
                             : (res.reachability == 1 ? "unreachable"
                                                      : "cap_exceeded");
    t.add_row({o.family, o.minimize_rho ? Cell{"minimized"} : Cell{o.rho},
               o.eta, o.measure, o.target, status,
               static_cast<double>(res.n), res.achieved, res.supremum});
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  fail(kExitValidation, "unknown --table for dep: " + o.table);
}

// ---- orderstats ------------------------------------------------------------------

int run_orderstats(const OrderOpts& o) {
  const auto alphas = parse_list(o.alpha, "--alpha");

  if (o.table == "info") {
    Table t;
    t.columns = {"n", "alpha", "r", "parameter", "markov_dependence", "joint"};
    t.info_columns = {"parameter", "markov_dependence", "joint"};
    for (double a : alphas) {
      for (int r = 1; r < o.n; ++r) {
        sampinfo_info_triple triple{};
        check(sampinfo_orderstats_joint_info_next(o.n, r, a, &triple));
        t.add_row({static_cast<double>(o.n), a, static_cast<double>(r),
                   triple.parameter, triple.dependence, triple.joint});
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "argmax") {
    Table t;
    t.columns = {"n", "alpha", "r_star", "joint_at_r_star"};
    t.info_columns = {"joint_at_r_star"};
    for (double a : alphas) {
      int r_star = 0;
      check(sampinfo_orderstats_argmax_joint(o.n, a, &r_star));
      sampinfo_info_triple triple{};
      check(sampinfo_orderstats_joint_info_next(o.n, r_star, a, &triple));
      t.add_row({static_cast<double>(o.n), a, static_cast<double>(r_star),
                 triple.joint});
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  if (o.table == "bridge") {
    Table t;
    t.columns = {"n", "alpha", "r", "correction", "bridge_param"};
    t.info_columns = {"correction", "bridge_param"};
    const bool with_mc = o.mc_reps > 0;
    if (with_mc) {
      t.columns.insert(t.columns.end(),
                       {"pred_mi_estimate", "pred_mi_se", "bridge_pred"});
      t.info_columns.insert({"pred_mi_estimate", "pred_mi_se", "bridge_pred"});
    }
    sampinfo_mc_settings mc{};
    sampinfo_mc_settings_default(&mc);
    mc.seed = o.common.seed;
    if (with_mc) mc.replications = o.mc_reps;
    for (double a : alphas) {
      for (int r = 1; r < o.n; ++r) {
        double corr = 0.0;
        double bp = 0.0;
        check(sampinfo_orderstats_bridge_param(o.n, r, a, &corr, &bp));
        std::vector<Cell> row = {static_cast<double>(o.n), a,
                                 static_cast<double>(r), corr, bp};
        if (with_mc) {
          double est = 0.0;
          double se = 0.0;
          check(sampinfo_oracle_mi_mc_orderstats_next(a, o.beta, o.n, r, &mc,
                                                      &est, &se));
          row.emplace_back(est);
          row.emplace_back(se);
          row.emplace_back(est - corr);
        }
        t.add_row(std::move(row));
      }
    }
    write_output(t, o.common.format, o.common.unit, o.common.out);
    return 0;
  }

  fail(kExitValidation, "unknown --table for orderstats: " + o.table);
}

// ---- verify ----------------------------------------------------------------------

int run_verify(const VerifyOpts& o) {
  char* report = nullptr;
  int all_passed = 0;
  const sampinfo_status s = sampinfo_verify_run(o.common.seed, o.tol_scale,
                                                &report, &all_passed);
  if (s != SAMPINFO_OK) {
    fail(kExitValidation, std::string(sampinfo_strerror(s)) + ": " +
                              sampinfo_last_error());
  }
  if (o.common.out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(o.common.out, std::ios::binary);
    if (!f) {
      sampinfo_string_free(report);
      fail(kExitValidation, "cannot open output file: " + o.common.out);
    }
    f << report;
  }
  sampinfo_string_free(report);
  return all_passed ? 0 : kExitVerifyMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian sample-information measures for parameters and "
               "predictions: closed forms, design optimizers and "
               "verification oracles"};
  app.require_subcommand(1);

  LinmodelOpts lin;
  DesignOpts des;
  TteOpts tte;
  DepOpts dep;
  OrderOpts ord;
  VerifyOpts ver;

  auto* sub_lin = app.add_subcommand(
      "linmodel", "normal linear model information measures");
  add_common(sub_lin, lin.common);
  sub_lin->add_option("--eigenvalues", lin.eigenvalues,
                      "rotated design spectrum, comma separated")
      ->required();
  sub_lin->add_option("--prior-variances", lin.prior_variances,
                      "diagonal prior variances, comma separated")
      ->required();
  sub_lin->add_option("--eta", lin.eta, "noise-to-prior variance ratio");
  sub_lin->add_option("--z", lin.z, "prediction covariate point");
  sub_lin->add_option("--sweep", lin.sweep,
                      "emit N unit-norm directions (p = 2); 0 = header only");
  sub_lin->add_option("--design", lin.design,
                      "fixed | predictive-opt (re-optimize per direction)")
      ->check(CLI::IsMember({"fixed", "predictive-opt"}));
  sub_lin->add_option("--budget", lin.budget,
                      "sample budget for --design predictive-opt");
  sub_lin->add_option("--w1", lin.w1, "parameter-information weight");
  sub_lin->add_option("--w2", lin.w2, "predictive-information weight");

  auto* sub_des = app.add_subcommand("design", "optimal allocation schemes");
  add_common(sub_des, des.common);
  sub_des->add_option("--mode", des.mode,
                      "sample-param | sample-pred | prior-var");
  sub_des->add_option("--budget", des.budget, "total sample size or variance");
  sub_des->add_option("--eta", des.eta, "noise-to-prior variance ratio");
  sub_des->add_option("--prior-variances", des.prior_variances,
                      "prior variances (sample allocation modes)");
  sub_des->add_option("--lambda", des.lambda,
                      "design eigenvalues, descending (prior-var mode)");
  sub_des->add_option("--z", des.z, "prediction point (sample-pred mode)");
  sub_des->add_flag("--round", des.round,
                    "also report the best integer rounding");
  sub_des->add_option("--kappa-sweep", des.kappa_sweep,
                      "emit information-vs-condition-number curves (N steps)");
  sub_des->add_option("--kappa-max", des.kappa_max,
                      "largest condition number in the sweep");

  auto* sub_tte = app.add_subcommand(
      "tte", "time-transformed-exponential lifetime family");
  add_common(sub_tte, tte.common);
  sub_tte->add_option("--table", tte.table,
                      "decomposition | censoring | observed | suffstat");
  sub_tte->add_option("--alpha", tte.alpha, "prior shape(s), comma separated");
  sub_tte->add_option("--beta", tte.beta, "prior rate");
  sub_tte->add_option("--n", tte.n, "sample size");
  sub_tte->add_option("--n-max", tte.n_max, "emit rows for n = 0..n-max");
  sub_tte->add_option("--s", tte.s, "observed sufficient statistic");
  sub_tte->add_option("--transform", tte.transform,
                      "exponential | weibull | pareto1 | extreme-value");
  sub_tte->add_option("--transform-param", tte.transform_param,
                      "Weibull exponent / Pareto threshold");
  sub_tte->add_option("--data", tte.data, "raw observations, comma separated");

  auto* sub_dep = app.add_subcommand("dep", "dependent normal sequences");
  add_common(sub_dep, dep.common);
  sub_dep->add_option("--table", dep.table,
                      "curves | joint | minjoint | samplesize");
  sub_dep->add_option("--family", dep.family, "uc | ic | sc");
  sub_dep->add_option("--rho", dep.rho, "conditional correlation");
  sub_dep->add_option("--eta", dep.eta, "noise-to-prior variance ratio");
  sub_dep->add_option("--n", dep.n, "sample size");
  sub_dep->add_option("--n-max", dep.n_max, "emit rows for n up to n-max");
  sub_dep->add_option("--rho-steps", dep.rho_steps,
                      "grid steps for the joint table");
  sub_dep->add_option("--target", dep.target, "information target in nats");
  sub_dep->add_option("--measure", dep.measure,
                      "parameter | predictive | joint");
  sub_dep->add_option("--policy", dep.policy, "reach | nearest")
      ->check(CLI::IsMember({"reach", "nearest"}));
  sub_dep->add_flag("--minimize-rho", dep.minimize_rho,
                    "minimize the joint measure over rho at each n");

  auto* sub_ord =
      app.add_subcommand("orderstats", "order-statistics information");
  add_common(sub_ord, ord.common);
  sub_ord->add_option("--table", ord.table, "info | argmax | bridge");
  sub_ord->add_option("--n", ord.n, "sample size");
  sub_ord->add_option("--alpha", ord.alpha, "prior shape(s)");
  sub_ord->add_option("--beta", ord.beta, "prior rate (bridge Monte Carlo)");
  sub_ord->add_option("--mc-reps", ord.mc_reps,
                      "Monte Carlo replications for the predictive bridge");

  auto* sub_ver =
      app.add_subcommand("verify", "run the oracle-agreement suite");
  add_common(sub_ver, ver.common);
  sub_ver->add_option("--tol-scale", ver.tol_scale,
                      "scale agreement tolerances (negative control)");

  // Duplicated options keep the last occurrence, so config-provided values
  // (inserted first) lose to explicit flags.
  for (CLI::App* sub : {sub_lin, sub_des, sub_tte, sub_dep, sub_ord, sub_ver}) {
    for (CLI::Option* opt : sub->get_options()) {
      if (!opt->get_expected_min()) continue;  // leave plain flags alone
      opt->take_last();
    }
  }

  try {
    // Pre-scan: a JSON config is rewritten into leading flags before the
    // single real parse (required options may live in the config).
    std::vector<std::string> args;
    for (int i = 0; i < argc; ++i) args.emplace_back(argv[i]);
    if (argc >= 2) {
      CLI::App* picked = app.get_subcommand_no_throw(args[1]);
      std::string config_path;
      for (int i = 2; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) {
          config_path = argv[i + 1];
        } else if (a.rfind("--config=", 0) == 0) {
          config_path = a.substr(9);
        }
      }
      if (picked != nullptr && !config_path.empty()) {
        const auto tokens = config_tokens(picked, config_path);
        std::vector<std::string> merged;
        merged.push_back(args[0]);
        merged.push_back(args[1]);
        for (const auto& tok : tokens) merged.push_back(tok);
        for (int i = 2; i < argc; ++i) merged.emplace_back(argv[i]);
        args = std::move(merged);
      }
    }
    std::vector<const char*> cargs;
    cargs.reserve(args.size());
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());

    if (sub_lin->parsed()) return run_linmodel(lin);
    if (sub_des->parsed()) return run_design(des);
    if (sub_tte->parsed()) return run_tte(tte);
    if (sub_dep->parsed()) return run_dep(dep);
    if (sub_ord->parsed()) return run_orderstats(ord);
    if (sub_ver->parsed()) return run_verify(ver);
    return kExitValidation;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitValidation;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

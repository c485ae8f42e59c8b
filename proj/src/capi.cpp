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

#include "sampinfo.h"

#include <cstring>
#include <functional>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <vector>

#include "depnormal.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "gaussmi.hpp"
#include "linmodel.hpp"
#include "oracle.hpp"
#include "orderstats.hpp"
#include "specfn.hpp"
#include "tte.hpp"
#include "verify.hpp"

namespace {

thread_local std::string g_last_error;

sampinfo_status set_error(sampinfo_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
sampinfo_status guarded(Fn&& fn) {
  try {
    fn();
    return SAMPINFO_OK;
  } catch (const sampinfo::not_positive_definite& e) {
    return set_error(SAMPINFO_ERR_NOT_POSDEF, e.what());
  } catch (const sampinfo::no_convergence& e) {
    return set_error(SAMPINFO_ERR_NO_CONVERGENCE, e.what());
  } catch (const std::domain_error& e) {
    return set_error(SAMPINFO_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(SAMPINFO_ERR_INVALID, e.what());
  } catch (const std::bad_alloc& e) {
    return set_error(SAMPINFO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SAMPINFO_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SAMPINFO_ERR_INTERNAL, "unknown error");
  }
}

sampinfo_status require(bool cond, const char* what) {
  return cond ? SAMPINFO_OK : set_error(SAMPINFO_ERR_INVALID, what);
}

sampinfo::tte::Transform to_transform(sampinfo_tte_transform t) {
  switch (t) {
    case SAMPINFO_TTE_EXPONENTIAL: return sampinfo::tte::Transform::exponential;
    case SAMPINFO_TTE_WEIBULL: return sampinfo::tte::Transform::weibull;
    case SAMPINFO_TTE_PARETO1: return sampinfo::tte::Transform::pareto1;
    case SAMPINFO_TTE_EXTREME_VALUE:
      return sampinfo::tte::Transform::extreme_value;
  }
  throw std::invalid_argument("unknown transform tag");
}

sampinfo::depnormal::Family to_family(sampinfo_dep_family f) {
  switch (f) {
    case SAMPINFO_DEP_UC: return sampinfo::depnormal::Family::UC;
    case SAMPINFO_DEP_IC: return sampinfo::depnormal::Family::IC;
    case SAMPINFO_DEP_SC: return sampinfo::depnormal::Family::SC;
  }
  throw std::invalid_argument("unknown correlation family tag");
}

sampinfo_info_triple to_c(const sampinfo::linmodel::InfoTriple& t) {
  return {t.parameter, t.predictive, t.joint, t.dependence};
}

sampinfo::oracle::QuadratureSettings to_quad(
    const sampinfo_quad_settings* s) {
  sampinfo::oracle::QuadratureSettings q;
  if (s) {
    q.relative_tolerance = s->relative_tolerance;
    q.max_subdivisions = s->max_subdivisions;
    q.tail_mass = s->tail_mass;
  }
  return q;
}

sampinfo::oracle::MonteCarloSettings to_mc(const sampinfo_mc_settings* s) {
  sampinfo::oracle::MonteCarloSettings m;
  if (s) {
    m.seed = s->seed;
    m.replications = s->replications;
    m.batches = s->batches;
  }
  return m;
}

}  // namespace

struct sampinfo_linmodel {
  sampinfo::linmodel::LinearModelSpec spec;
};

struct sampinfo_depmodel {
  sampinfo::depnormal::DepNormalSpec spec;
};

extern "C" {

const char* sampinfo_strerror(int code) {
  switch (code) {
    case SAMPINFO_OK: return "ok";
    case SAMPINFO_ERR_INVALID: return "invalid argument";
    case SAMPINFO_ERR_DOMAIN: return "domain error";
    case SAMPINFO_ERR_NOT_POSDEF: return "matrix not positive definite";
    case SAMPINFO_ERR_NO_CONVERGENCE: return "oracle did not converge";
    case SAMPINFO_ERR_INTERNAL: return "internal error";
    default: return "unknown status";
  }
}

const char* sampinfo_last_error(void) { return g_last_error.c_str(); }

void sampinfo_version(int* major, int* minor, int* patch) {
  if (major) *major = 0;
  if (minor) *minor = 1;
  if (patch) *patch = 0;
}

/* ---- special functions ---- */

#define SAMPINFO_UNARY(cname, cppfn)                               \
  sampinfo_status cname(double x, double* out) {                   \
    if (sampinfo_status s = require(out != nullptr, "null output"); \
        s != SAMPINFO_OK)                                          \
      return s;                                                    \
    return guarded([&] { *out = cppfn(x); });                      \
  }

SAMPINFO_UNARY(sampinfo_log_gamma, sampinfo::specfn::log_gamma)
SAMPINFO_UNARY(sampinfo_digamma, sampinfo::specfn::digamma)
SAMPINFO_UNARY(sampinfo_trigamma, sampinfo::specfn::trigamma)
SAMPINFO_UNARY(sampinfo_gamma_entropy, sampinfo::specfn::gamma_entropy)
SAMPINFO_UNARY(sampinfo_pareto_entropy, sampinfo::specfn::pareto_entropy)
SAMPINFO_UNARY(sampinfo_kl_gamma_step, sampinfo::specfn::kl_gamma_step)
SAMPINFO_UNARY(sampinfo_mi_from_multiple_correlation,
               sampinfo::gaussmi::mi_from_multiple_correlation)

#undef SAMPINFO_UNARY

sampinfo_status sampinfo_log_beta(double a, double b, double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] { *out = sampinfo::specfn::log_beta(a, b); });
}

sampinfo_status sampinfo_mi_via_inverse_element(const double* corr, size_t n,
                                                size_t index, double* out) {
  if (auto s = require(corr && out, "null pointer"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    std::vector<double> entries(corr, corr + n * n);
    sampinfo::gaussmi::CorrelationMatrix cm(std::move(entries), n);
    *out = sampinfo::gaussmi::mi_via_inverse_element(cm, index);
  });
}

sampinfo_status sampinfo_predictive_correlation(double rho_conditional,
                                                double eta, double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::gaussmi::predictive_correlation(rho_conditional, eta);
  });
}

/* ---- linear model ---- */

sampinfo_status sampinfo_linmodel_create(const double* eigenvalues,
                                         const double* prior_variances,
                                         size_t p, double eta,
                                         sampinfo_linmodel** out) {
  if (auto s = require(eigenvalues && prior_variances && out && p > 0,
                       "null pointer or empty model");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    auto m = std::make_unique<sampinfo_linmodel>();
    m->spec.eigenvalues.assign(eigenvalues, eigenvalues + p);
    m->spec.prior_variances.assign(prior_variances, prior_variances + p);
    m->spec.eta = eta;
    m->spec.validate();
    *out = m.release();
  });
}

void sampinfo_linmodel_destroy(sampinfo_linmodel* m) { delete m; }

sampinfo_status sampinfo_linmodel_parameter_info(const sampinfo_linmodel* m,
                                                 double* out) {
  if (auto s = require(m && out, "null pointer"); s != SAMPINFO_OK) return s;
  return guarded([&] { *out = sampinfo::linmodel::parameter_info(m->spec); });
}

sampinfo_status sampinfo_linmodel_predictive_info(const sampinfo_linmodel* m,
                                                  const double* z, size_t p,
                                                  double* out) {
  if (auto s = require(m && z && out, "null pointer"); s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    *out = sampinfo::linmodel::predictive_info(m->spec, {z, p});
  });
}

sampinfo_status sampinfo_linmodel_joint_info(const sampinfo_linmodel* m,
                                             const double* z, size_t p,
                                             sampinfo_info_triple* out) {
  if (auto s = require(m && z && out, "null pointer"); s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    *out = to_c(sampinfo::linmodel::joint_info(m->spec, {z, p}));
  });
}

sampinfo_status sampinfo_linmodel_condition_number(const sampinfo_linmodel* m,
                                                   double* out) {
  if (auto s = require(m && out, "null pointer"); s != SAMPINFO_OK) return s;
  return guarded([&] { *out = sampinfo::linmodel::condition_number(m->spec); });
}

sampinfo_status sampinfo_linmodel_weighted_utility(
    const sampinfo_linmodel* m, const double* z, size_t p, double w1,
    double w2, sampinfo_weighted_utility* out) {
  if (auto s = require(m && z && out, "null pointer"); s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto u = sampinfo::linmodel::weighted_utility(m->spec, {z, p}, w1, w2);
    out->utility = u.utility;
    out->parameter = u.parameter;
    out->predictive = u.predictive;
    out->conditional_term = u.conditional_term;
  });
}

/* ---- design ---- */

namespace {

void fill_allocation(const sampinfo::design::AllocationResult& r,
                     double* weights_out, sampinfo_allocation_info* info) {
  std::memcpy(weights_out, r.weights.data(),
              r.weights.size() * sizeof(double));
  if (info) {
    info->objective_value = r.objective_value;
    info->feasible = r.feasible ? 1 : 0;
    info->binding_minimum = r.binding_minimum;
    info->continuous = r.continuous ? 1 : 0;
    info->used_fallback = r.used_fallback ? 1 : 0;
  }
}

}  // namespace

sampinfo_status sampinfo_design_sample_allocation_parameter(
    double n, double eta, const double* prior_variances, size_t p,
    double* weights_out, sampinfo_allocation_info* info) {
  if (auto s = require(prior_variances && weights_out && p > 0, "null pointer");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto r = sampinfo::design::optimal_sample_allocation_parameter(
        n, eta, {prior_variances, p});
    fill_allocation(r, weights_out, info);
  });
}

sampinfo_status sampinfo_design_sample_allocation_predictive(
    double n, double eta, const double* prior_variances, const double* z,
    size_t p, double* weights_out, sampinfo_allocation_info* info) {
  if (auto s = require(prior_variances && z && weights_out && p > 0,
                       "null pointer");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto r = sampinfo::design::optimal_sample_allocation_predictive(
        n, eta, {prior_variances, p}, {z, p});
    fill_allocation(r, weights_out, info);
  });
}

sampinfo_status sampinfo_design_prior_variance_allocation(
    double c, double eta, const double* eigenvalues, size_t p,
    double* weights_out, sampinfo_allocation_info* info) {
  if (auto s = require(eigenvalues && weights_out && p > 0, "null pointer");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto r = sampinfo::design::optimal_prior_variance_allocation(
        c, eta, {eigenvalues, p});
    fill_allocation(r, weights_out, info);
  });
}

sampinfo_status sampinfo_design_round_sample_allocation(
    double n, double eta, const double* prior_variances, const double* z,
    size_t p, const double* weights, double* rounded_out,
    double* objective_out) {
  if (auto s = require(prior_variances && weights && rounded_out && p > 0,
                       "null pointer");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    std::span<const double> v0{prior_variances, p};
    std::function<double(std::span<const double>)> obj;
    if (z) {
      std::vector<double> zv(z, z + p);
      obj = [v0, eta, zv](std::span<const double> w) {
        return sampinfo::linmodel::detail::predictive_info_raw(w, v0, eta, zv);
      };
    } else {
      obj = [v0, eta](std::span<const double> w) {
        return sampinfo::linmodel::detail::parameter_info_raw(w, v0, eta);
      };
    }
    const auto r =
        sampinfo::design::round_allocation({weights, p}, n, obj);
    std::memcpy(rounded_out, r.weights.data(), p * sizeof(double));
    if (objective_out) *objective_out = r.objective_value;
  });
}

/* ---- TTE ---- */

sampinfo_status sampinfo_tte_parameter_info(double alpha, double n,
                                            double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::tte::parameter_info_real({alpha, 1.0}, n);
  });
}

sampinfo_status sampinfo_tte_parameter_info_recursive(double alpha, int n,
                                                      double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::tte::parameter_info_recursive({alpha, 1.0}, n);
  });
}

sampinfo_status sampinfo_tte_predictive_info(double alpha, double n,
                                             double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::tte::predictive_info_real({alpha, 1.0}, n);
  });
}

sampinfo_status sampinfo_tte_observed_parameter_info(double alpha, double beta,
                                                     int n, double s_n,
                                                     double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::tte::observed_param_info({alpha, beta}, {n, s_n});
  });
}

sampinfo_status sampinfo_tte_observed_predictive_info(double alpha,
                                                      double beta, int n,
                                                      double s_n,
                                                      double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::tte::observed_predictive_info({alpha, beta}, {n, s_n});
  });
}

sampinfo_status sampinfo_tte_info_triple(double alpha, int n,
                                         sampinfo_info_triple* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = to_c(sampinfo::tte::info_triple({alpha, 1.0}, n));
  });
}

sampinfo_status sampinfo_tte_decomposition(double alpha, int n,
                                           double* parameter,
                                           double* predictive,
                                           double* parameter_shifted,
                                           double* residual) {
  if (auto s = require(parameter && predictive && parameter_shifted,
                       "null output");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto d = sampinfo::tte::decomposition({alpha, 1.0}, n);
    *parameter = d.parameter;
    *predictive = d.predictive;
    *parameter_shifted = d.parameter_shifted;
    if (residual) *residual = d.residual;
  });
}

sampinfo_status sampinfo_tte_censoring_loss(double alpha, int n, int r,
                                            double* param_loss,
                                            double* predictive_loss) {
  if (auto s = require(param_loss && predictive_loss, "null output");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto loss = sampinfo::tte::censoring_loss({alpha, 1.0}, n, r);
    *param_loss = loss.param_loss;
    *predictive_loss = loss.predictive_loss;
  });
}

sampinfo_status sampinfo_tte_suff_stat(sampinfo_tte_transform transform,
                                       double transform_param,
                                       const double* data, size_t len,
                                       double* out) {
  if (auto s = require(out && (data || len == 0), "null pointer");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    *out = sampinfo::tte::suff_stat(to_transform(transform), transform_param,
                                    {data, len});
  });
}

/* ---- dependent normal ---- */

sampinfo_status sampinfo_depmodel_create(sampinfo_dep_family family,
                                         double rho, int n, double eta,
                                         sampinfo_depmodel** out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    auto m = std::make_unique<sampinfo_depmodel>();
    m->spec.family = to_family(family);
    m->spec.rho = m->spec.family == sampinfo::depnormal::Family::UC ? 0.0 : rho;
    m->spec.n = n;
    m->spec.eta = eta;
    m->spec.validate();
    *out = m.release();
  });
}

void sampinfo_depmodel_destroy(sampinfo_depmodel* m) { delete m; }

#define SAMPINFO_DEP_SCALAR(cname, cppfn)                                  \
  sampinfo_status cname(const sampinfo_depmodel* m, double* out) {         \
    if (auto s = require(m && out, "null pointer"); s != SAMPINFO_OK)      \
      return s;                                                            \
    return guarded([&] { *out = sampinfo::depnormal::cppfn(m->spec); });   \
  }

SAMPINFO_DEP_SCALAR(sampinfo_depmodel_t_n, t_n)
SAMPINFO_DEP_SCALAR(sampinfo_depmodel_parameter_info, parameter_info)
SAMPINFO_DEP_SCALAR(sampinfo_depmodel_conditional_dependence_info,
                    conditional_dependence_info)
SAMPINFO_DEP_SCALAR(sampinfo_depmodel_predictive_info, predictive_info)
SAMPINFO_DEP_SCALAR(sampinfo_depmodel_predictive_info_one_step,
                    predictive_info_one_step)

#undef SAMPINFO_DEP_SCALAR

sampinfo_status sampinfo_depmodel_joint_info(const sampinfo_depmodel* m,
                                             sampinfo_info_triple* out) {
  if (auto s = require(m && out, "null pointer"); s != SAMPINFO_OK) return s;
  return guarded([&] { *out = to_c(sampinfo::depnormal::joint_info(m->spec)); });
}

sampinfo_status sampinfo_dep_joint_minimizer(sampinfo_dep_family family, int n,
                                             double eta, double* rho0,
                                             double* min_joint,
                                             int* interior) {
  if (auto s = require(rho0 && min_joint, "null output"); s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto m =
        sampinfo::depnormal::joint_minimizer_rho(to_family(family), n, eta);
    *rho0 = m.rho0;
    *min_joint = m.min_joint;
    if (interior) *interior = m.interior ? 1 : 0;
  });
}

sampinfo_status sampinfo_dep_sample_size(sampinfo_dep_family family,
                                         int minimize_rho, double rho,
                                         double eta, double target,
                                         sampinfo_dep_measure measure,
                                         sampinfo_search_policy policy,
                                         sampinfo_sample_size_result* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    using sampinfo::depnormal::Measure;
    using sampinfo::depnormal::SearchPolicy;
    Measure m;
    switch (measure) {
      case SAMPINFO_MEASURE_PARAMETER: m = Measure::parameter; break;
      case SAMPINFO_MEASURE_PREDICTIVE: m = Measure::predictive; break;
      case SAMPINFO_MEASURE_JOINT: m = Measure::joint; break;
      default: throw std::invalid_argument("unknown measure tag");
    }
    const SearchPolicy p = policy == SAMPINFO_SEARCH_NEAREST
                               ? SearchPolicy::nearest
                               : SearchPolicy::reach;
    const auto r = sampinfo::depnormal::sample_size_for_info(
        to_family(family),
        minimize_rho ? std::nullopt : std::optional<double>(rho), eta, target,
        m, p);
    out->reachability = static_cast<int>(r.reachability);
    out->n = r.n;
    out->achieved = r.achieved;
    out->supremum = r.supremum;
  });
}

/* ---- order statistics ---- */

sampinfo_status sampinfo_orderstats_markov_dependence(int n, int r,
                                                      double* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = sampinfo::orderstats::markov_dependence_info({n, r});
  });
}

sampinfo_status sampinfo_orderstats_joint_info_next(int n, int r, double alpha,
                                                    sampinfo_info_triple* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *out = to_c(sampinfo::orderstats::joint_info_next_order_stat(
        {n, r}, {alpha, 1.0}));
  });
}

sampinfo_status sampinfo_orderstats_argmax_joint(int n, double alpha,
                                                 int* r_star) {
  if (auto s = require(r_star, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *r_star = sampinfo::orderstats::argmax_joint_r(n, {alpha, 1.0});
  });
}

sampinfo_status sampinfo_orderstats_bridge_param(int n, int r, double alpha,
                                                 double* correction,
                                                 double* bridge_param) {
  if (auto s = require(correction && bridge_param, "null output");
      s != SAMPINFO_OK)
    return s;
  return guarded([&] {
    const auto b =
        sampinfo::orderstats::bridge_measures({n, r}, {alpha, 1.0});
    *correction = b.correction;
    *bridge_param = b.bridge_param;
  });
}

sampinfo_status sampinfo_orderstats_direction_check(
    int n, int r, double alpha, double beta,
    const sampinfo_quad_settings* quad, const sampinfo_mc_settings* mc,
    sampinfo_order_direction_check* out) {
  if (auto s = require(out, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    const auto c = sampinfo::orderstats::next_order_stat_direction_check(
        {n, r}, {alpha, beta}, to_quad(quad), to_mc(mc));
    out->predictive_mi = c.predictive_side.lhs;
    out->predictive_tolerance = c.predictive_side.tolerance;
    out->markov_dependence = c.predictive_side.rhs;
    out->direction_predictive = c.predictive_side.direction;
    out->single_outcome_mi = c.parameter_side.lhs;
    out->single_outcome_tolerance = c.parameter_side.tolerance;
    out->incremental_parameter_mi = c.parameter_side.rhs;
    out->direction_parameter = c.parameter_side.direction;
    out->indeterminate = c.indeterminate ? 1 : 0;
    out->consistent = c.consistent ? 1 : 0;
  });
}

/* ---- oracles ---- */

void sampinfo_quad_settings_default(sampinfo_quad_settings* s) {
  if (!s) return;
  const sampinfo::oracle::QuadratureSettings d;
  s->relative_tolerance = d.relative_tolerance;
  s->max_subdivisions = d.max_subdivisions;
  s->tail_mass = d.tail_mass;
}

void sampinfo_mc_settings_default(sampinfo_mc_settings* s) {
  if (!s) return;
  const sampinfo::oracle::MonteCarloSettings d;
  s->seed = d.seed;
  s->replications = d.replications;
  s->batches = d.batches;
}

sampinfo_status sampinfo_oracle_mi_quadrature_tte(
    double alpha, int n, const sampinfo_quad_settings* settings,
    double* estimate, double* error_bound) {
  if (auto s = require(estimate, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    const auto r =
        sampinfo::oracle::mi_quadrature_tte(alpha, n, to_quad(settings));
    *estimate = r.estimate;
    if (error_bound) *error_bound = r.error_bound;
  });
}

sampinfo_status sampinfo_oracle_mi_quadrature_uniform_orderstats(
    int n, int r, const sampinfo_quad_settings* settings, double* estimate) {
  if (auto s = require(estimate, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    *estimate = sampinfo::oracle::mi_quadrature_consecutive_uniform_order_stats(
        n, r, to_quad(settings));
  });
}

sampinfo_status sampinfo_oracle_mi_mc_tte(sampinfo_tte_transform transform,
                                          double transform_param, double alpha,
                                          double beta, int n,
                                          const sampinfo_mc_settings* settings,
                                          double* estimate,
                                          double* standard_error) {
  if (auto s = require(estimate, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    const auto r = sampinfo::oracle::mi_montecarlo_tte(
        to_transform(transform), transform_param, alpha, beta, n,
        to_mc(settings));
    *estimate = r.estimate;
    if (standard_error) *standard_error = r.standard_error;
  });
}

sampinfo_status sampinfo_oracle_mi_mc_depnormal(
    sampinfo_dep_family family, double rho, int n, double eta,
    sampinfo_mi_target target, const sampinfo_mc_settings* settings,
    double* estimate, double* standard_error) {
  if (auto s = require(estimate, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    using sampinfo::oracle::MiTarget;
    MiTarget t;
    switch (target) {
      case SAMPINFO_TARGET_PARAMETER: t = MiTarget::parameter; break;
      case SAMPINFO_TARGET_PREDICTIVE: t = MiTarget::predictive; break;
      case SAMPINFO_TARGET_CONDITIONAL_DEPENDENCE:
        t = MiTarget::conditional_dependence;
        break;
      case SAMPINFO_TARGET_JOINT: t = MiTarget::joint; break;
      default: throw std::invalid_argument("unknown target tag");
    }
    sampinfo::depnormal::DepNormalSpec spec;
    spec.family = to_family(family);
    spec.rho = spec.family == sampinfo::depnormal::Family::UC ? 0.0 : rho;
    spec.n = n;
    spec.eta = eta;
    const auto r =
        sampinfo::oracle::mi_montecarlo_depnormal(spec, t, to_mc(settings));
    *estimate = r.estimate;
    if (standard_error) *standard_error = r.standard_error;
  });
}

sampinfo_status sampinfo_oracle_mi_mc_orderstats_next(
    double alpha, double beta, int n, int r,
    const sampinfo_mc_settings* settings, double* estimate,
    double* standard_error) {
  if (auto s = require(estimate, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    const auto res = sampinfo::oracle::mi_montecarlo_orderstats_next(
        alpha, beta, n, r, to_mc(settings));
    *estimate = res.estimate;
    if (standard_error) *standard_error = res.standard_error;
  });
}

/* ---- verification ---- */

sampinfo_status sampinfo_verify_run(uint64_t seed, double tolerance_scale,
                                    char** report_json, int* all_passed) {
  if (auto s = require(report_json, "null output"); s != SAMPINFO_OK) return s;
  return guarded([&] {
    sampinfo::verify::Options opt;
    opt.seed = seed;
    opt.tolerance_scale = tolerance_scale;
    const auto report = sampinfo::verify::run(opt);
    const std::string json = sampinfo::verify::to_json(report);
    char* buf = static_cast<char*>(::operator new(json.size() + 1));
    std::memcpy(buf, json.c_str(), json.size() + 1);
    *report_json = buf;
    if (all_passed) *all_passed = report.ok() ? 1 : 0;
  });
}

void sampinfo_string_free(char* s) { ::operator delete(s); }

} /* extern "C" */

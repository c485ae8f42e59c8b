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

/* sampinfo: Bayesian sample-information measures about parameters and
 * predictions, in closed form for normal linear models, a
 * time-transformed-exponential lifetime family with gamma priors,
 * dependent normal sequences and order statistics, together with
 * allocation optimizers and independent quadrature / Monte Carlo
 * verification oracles.
 *
 * Conventions:
 *   - every function returns a sampinfo_status code; results come back
 *     through out-pointers;
 *   - all information values are in nats;
 *   - handles are opaque and freed with the matching _destroy call;
 *   - all functions are thread-safe; handles are immutable after creation.
 */

#ifndef SAMPINFO_H
#define SAMPINFO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* ---- status codes ------------------------------------------------------ */

typedef enum sampinfo_status {
  SAMPINFO_OK = 0,
  SAMPINFO_ERR_INVALID = 1,          /* malformed input (sizes, null pointers) */
  SAMPINFO_ERR_DOMAIN = 2,           /* argument outside the math domain */
  SAMPINFO_ERR_NOT_POSDEF = 3,       /* correlation matrix not positive definite */
  SAMPINFO_ERR_NO_CONVERGENCE = 4,   /* oracle failed to meet its tolerance */
  SAMPINFO_ERR_INTERNAL = 5
} sampinfo_status;

/* Static description of a status code. */
const char* sampinfo_strerror(int code);

/* Detailed message for the most recent error on this thread. */
const char* sampinfo_last_error(void);

void sampinfo_version(int* major, int* minor, int* patch);

/* ---- shared records ----------------------------------------------------- */

/* Information about the parameter, a future outcome, and both jointly.
 * joint = parameter + dependence. predictive is NaN where no closed form
 * exists (order statistics; use the Monte Carlo oracle). */
typedef struct sampinfo_info_triple {
  double parameter;
  double predictive;
  double joint;
  double dependence;
} sampinfo_info_triple;

/* ---- special functions --------------------------------------------------- */

sampinfo_status sampinfo_log_gamma(double x, double* out);
sampinfo_status sampinfo_digamma(double x, double* out);
sampinfo_status sampinfo_trigamma(double x, double* out);
sampinfo_status sampinfo_log_beta(double a, double b, double* out);
/* Entropy of gamma(alpha) with unit rate; subtract ln(beta) for rate beta. */
sampinfo_status sampinfo_gamma_entropy(double alpha, double* out);
/* Entropy of the unit-scale Pareto (Lomax) law with shape alpha. */
sampinfo_status sampinfo_pareto_entropy(double alpha, double* out);
/* KL divergence between gamma laws with shapes (v+1, v) at equal rate. */
sampinfo_status sampinfo_kl_gamma_step(double v, double* out);

/* ---- Gaussian mutual-information primitives ------------------------------ */

sampinfo_status sampinfo_mi_from_multiple_correlation(double r_squared,
                                                      double* out);
/* corr: row-major n*n symmetric correlation matrix with unit diagonal.
 * Returns (1/2) ln [C^-1]_(index,index), index 0-based. */
sampinfo_status sampinfo_mi_via_inverse_element(const double* corr, size_t n,
                                                size_t index, double* out);
sampinfo_status sampinfo_predictive_correlation(double rho_conditional,
                                                double eta, double* out);

/* ---- normal linear model -------------------------------------------------- */

typedef struct sampinfo_linmodel sampinfo_linmodel;

/* eigenvalues: spectrum of the rotated design (all > 0);
 * prior_variances: diagonal prior covariance (all > 0); eta > 0. */
sampinfo_status sampinfo_linmodel_create(const double* eigenvalues,
                                         const double* prior_variances,
                                         size_t p, double eta,
                                         sampinfo_linmodel** out);
void sampinfo_linmodel_destroy(sampinfo_linmodel* m);

sampinfo_status sampinfo_linmodel_parameter_info(const sampinfo_linmodel* m,
                                                 double* out);
sampinfo_status sampinfo_linmodel_predictive_info(const sampinfo_linmodel* m,
                                                  const double* z, size_t p,
                                                  double* out);
sampinfo_status sampinfo_linmodel_joint_info(const sampinfo_linmodel* m,
                                             const double* z, size_t p,
                                             sampinfo_info_triple* out);
sampinfo_status sampinfo_linmodel_condition_number(const sampinfo_linmodel* m,
                                                   double* out);

typedef struct sampinfo_weighted_utility {
  double utility;           /* w1 * parameter + w2 * predictive */
  double parameter;
  double predictive;
  double conditional_term;  /* parameter - predictive */
} sampinfo_weighted_utility;

sampinfo_status sampinfo_linmodel_weighted_utility(
    const sampinfo_linmodel* m, const double* z, size_t p, double w1,
    double w2, sampinfo_weighted_utility* out);

/* ---- allocation optimizers ------------------------------------------------ */

typedef struct sampinfo_allocation_info {
  double objective_value;  /* nats; NaN when infeasible */
  int feasible;
  double binding_minimum;  /* minimum leading-weight requirement */
  int continuous;          /* always 1: continuous relaxation */
  int used_fallback;       /* 1 when constrained maximization replaced the
                              closed form (zero covariate entries) */
} sampinfo_allocation_info;

/* weights_out must hold p doubles. */
sampinfo_status sampinfo_design_sample_allocation_parameter(
    double n, double eta, const double* prior_variances, size_t p,
    double* weights_out, sampinfo_allocation_info* info);
sampinfo_status sampinfo_design_sample_allocation_predictive(
    double n, double eta, const double* prior_variances, const double* z,
    size_t p, double* weights_out, sampinfo_allocation_info* info);
/* eigenvalues must be sorted in descending order. */
sampinfo_status sampinfo_design_prior_variance_allocation(
    double c, double eta, const double* eigenvalues, size_t p,
    double* weights_out, sampinfo_allocation_info* info);

/* Rounds a continuous sample allocation to integers conserving the
 * (integer) budget, re-evaluating the information objective on every
 * floor/ceil neighbor. z may be NULL for the parameter objective. */
sampinfo_status sampinfo_design_round_sample_allocation(
    double n, double eta, const double* prior_variances, const double* z,
    size_t p, const double* weights, double* rounded_out,
    double* objective_out);

/* ---- time-transformed-exponential family ---------------------------------- */

typedef enum sampinfo_tte_transform {
  SAMPINFO_TTE_EXPONENTIAL = 0,
  SAMPINFO_TTE_WEIBULL = 1,       /* parameter: exponent q > 0 */
  SAMPINFO_TTE_PARETO1 = 2,       /* parameter: threshold a > 0 */
  SAMPINFO_TTE_EXTREME_VALUE = 3
} sampinfo_tte_transform;

/* n may be any nonnegative real; non-integer values interpolate the
 * integer-sample formulas for design exploration. */
sampinfo_status sampinfo_tte_parameter_info(double alpha, double n,
                                            double* out);
sampinfo_status sampinfo_tte_parameter_info_recursive(double alpha, int n,
                                                      double* out);
sampinfo_status sampinfo_tte_predictive_info(double alpha, double n,
                                             double* out);
sampinfo_status sampinfo_tte_observed_parameter_info(double alpha, double beta,
                                                     int n, double s_n,
                                                     double* out);
sampinfo_status sampinfo_tte_observed_predictive_info(double alpha,
                                                      double beta, int n,
                                                      double s_n, double* out);
sampinfo_status sampinfo_tte_info_triple(double alpha, int n,
                                         sampinfo_info_triple* out);
/* parameter_shifted = parameter information under shape alpha + 1;
 * residual = parameter - predictive - parameter_shifted. */
sampinfo_status sampinfo_tte_decomposition(double alpha, int n,
                                           double* parameter,
                                           double* predictive,
                                           double* parameter_shifted,
                                           double* residual);
sampinfo_status sampinfo_tte_censoring_loss(double alpha, int n, int r,
                                            double* param_loss,
                                            double* predictive_loss);
sampinfo_status sampinfo_tte_suff_stat(sampinfo_tte_transform transform,
                                       double transform_param,
                                       const double* data, size_t len,
                                       double* out);

/* ---- dependent normal sequences ------------------------------------------- */

typedef enum sampinfo_dep_family {
  SAMPINFO_DEP_UC = 0,  /* uncorrelated */
  SAMPINFO_DEP_IC = 1,  /* intraclass: constant off-diagonal rho */
  SAMPINFO_DEP_SC = 2   /* serial: rho^|i-j| */
} sampinfo_dep_family;

typedef struct sampinfo_depmodel sampinfo_depmodel;

sampinfo_status sampinfo_depmodel_create(sampinfo_dep_family family,
                                         double rho, int n, double eta,
                                         sampinfo_depmodel** out);
void sampinfo_depmodel_destroy(sampinfo_depmodel* m);

sampinfo_status sampinfo_depmodel_t_n(const sampinfo_depmodel* m, double* out);
sampinfo_status sampinfo_depmodel_parameter_info(const sampinfo_depmodel* m,
                                                 double* out);
sampinfo_status sampinfo_depmodel_conditional_dependence_info(
    const sampinfo_depmodel* m, double* out);
sampinfo_status sampinfo_depmodel_predictive_info(const sampinfo_depmodel* m,
                                                  double* out);
/* The immediate-future simplification using only the latest observation. */
sampinfo_status sampinfo_depmodel_predictive_info_one_step(
    const sampinfo_depmodel* m, double* out);
sampinfo_status sampinfo_depmodel_joint_info(const sampinfo_depmodel* m,
                                             sampinfo_info_triple* out);

/* Correlation minimizing the joint information, for IC/SC and n >= 2.
 * interior = 0 when the minimum sits on the boundary of (0, 1). */
sampinfo_status sampinfo_dep_joint_minimizer(sampinfo_dep_family family, int n,
                                             double eta, double* rho0,
                                             double* min_joint, int* interior);

typedef enum sampinfo_dep_measure {
  SAMPINFO_MEASURE_PARAMETER = 0,
  SAMPINFO_MEASURE_PREDICTIVE = 1,
  SAMPINFO_MEASURE_JOINT = 2
} sampinfo_dep_measure;

typedef enum sampinfo_search_policy {
  SAMPINFO_SEARCH_REACH = 0,   /* smallest n with measure >= target */
  SAMPINFO_SEARCH_NEAREST = 1  /* n whose measure is closest to target */
} sampinfo_search_policy;

typedef struct sampinfo_sample_size_result {
  int reachability;  /* 0 reached, 1 unreachable (bounded), 2 cap exceeded */
  int n;
  double achieved;
  double supremum;   /* +inf when the measure is unbounded in n */
} sampinfo_sample_size_result;

/* minimize_rho != 0 minimizes the joint measure over rho at each n
 * (IC/SC, measure = joint); rho is ignored in that case. */
sampinfo_status sampinfo_dep_sample_size(sampinfo_dep_family family,
                                         int minimize_rho, double rho,
                                         double eta, double target,
                                         sampinfo_dep_measure measure,
                                         sampinfo_search_policy policy,
                                         sampinfo_sample_size_result* out);

/* ---- order statistics ------------------------------------------------------ */

/* Mutual information between consecutive order statistics of a sample of
 * size n; free of the parent distribution and the prior. */
sampinfo_status sampinfo_orderstats_markov_dependence(int n, int r,
                                                      double* out);
/* Joint information about the parameter and the next order statistic from
 * the first r failures (exponential parent, gamma prior with shape alpha).
 * The predictive field is NaN (oracle-valued). */
sampinfo_status sampinfo_orderstats_joint_info_next(int n, int r, double alpha,
                                                    sampinfo_info_triple* out);
sampinfo_status sampinfo_orderstats_argmax_joint(int n, double alpha,
                                                 int* r_star);
/* correction = ln(n/(n-r)); bridge_param = parameter MI - correction. */
sampinfo_status sampinfo_orderstats_bridge_param(int n, int r, double alpha,
                                                 double* correction,
                                                 double* bridge_param);

/* Two equivalent order comparisons (predictive information vs Markov
 * dependence; single-outcome information vs the incremental parameter
 * information). Directions are +1/-1, or 0 when within tolerance;
 * consistent = 1 when they agree or either side is indeterminate.
 * Declared after the oracle settings below. */
typedef struct sampinfo_order_direction_check {
  double predictive_mi;          /* Monte Carlo estimate */
  double predictive_tolerance;   /* three standard errors */
  double markov_dependence;
  int direction_predictive;
  double single_outcome_mi;      /* quadrature estimate */
  double single_outcome_tolerance;
  double incremental_parameter_mi;
  int direction_parameter;
  int indeterminate;
  int consistent;
} sampinfo_order_direction_check;

/* ---- verification oracles --------------------------------------------------- */

typedef struct sampinfo_quad_settings {
  double relative_tolerance;  /* > 0 */
  int max_subdivisions;       /* >= 16 */
  double tail_mass;           /* quantile truncation, (0, 0.5) */
} sampinfo_quad_settings;

/* Default-initialized settings (1e-8 / 2000 / 1e-10). */
void sampinfo_quad_settings_default(sampinfo_quad_settings* s);

typedef struct sampinfo_mc_settings {
  uint64_t seed;
  long long replications;  /* >= 1000 */
  int batches;             /* >= 10; standard errors from batch means */
} sampinfo_mc_settings;

void sampinfo_mc_settings_default(sampinfo_mc_settings* s);

/* Parameter information of the TTE family by nested quadrature of the
 * defining integral; settings may be NULL for defaults. */
sampinfo_status sampinfo_oracle_mi_quadrature_tte(
    double alpha, int n, const sampinfo_quad_settings* settings,
    double* estimate, double* error_bound);

/* Mutual information between consecutive uniform order statistics by 2-D
 * quadrature (n <= 12). */
sampinfo_status sampinfo_oracle_mi_quadrature_uniform_orderstats(
    int n, int r, const sampinfo_quad_settings* settings, double* estimate);

/* Seeded Monte Carlo estimate of the TTE parameter information generated
 * through the named transform. */
sampinfo_status sampinfo_oracle_mi_mc_tte(sampinfo_tte_transform transform,
                                          double transform_param, double alpha,
                                          double beta, int n,
                                          const sampinfo_mc_settings* settings,
                                          double* estimate,
                                          double* standard_error);

typedef enum sampinfo_mi_target {
  SAMPINFO_TARGET_PARAMETER = 0,
  SAMPINFO_TARGET_PREDICTIVE = 1,
  SAMPINFO_TARGET_CONDITIONAL_DEPENDENCE = 2,
  SAMPINFO_TARGET_JOINT = 3
} sampinfo_mi_target;

sampinfo_status sampinfo_oracle_mi_mc_depnormal(
    sampinfo_dep_family family, double rho, int n, double eta,
    sampinfo_mi_target target, const sampinfo_mc_settings* settings,
    double* estimate, double* standard_error);

/* Unconditional mutual information between the first r order statistics
 * and the next one (exponential parent, gamma prior). */
sampinfo_status sampinfo_oracle_mi_mc_orderstats_next(
    double alpha, double beta, int n, int r,
    const sampinfo_mc_settings* settings, double* estimate,
    double* standard_error);

/* Oracle-backed order comparison for the next-order-statistic
 * decompositions; settings may be NULL for defaults. */
sampinfo_status sampinfo_orderstats_direction_check(
    int n, int r, double alpha, double beta,
    const sampinfo_quad_settings* quad, const sampinfo_mc_settings* mc,
    sampinfo_order_direction_check* out);

/* ---- verification report ----------------------------------------------------- */

/* Runs the full oracle-agreement suite. Writes a deterministic JSON report
 * (identical seed => identical bytes) to *report_json (free with
 * sampinfo_string_free) and the overall outcome to *all_passed (expected
 * mismatches do not count as failures). */
sampinfo_status sampinfo_verify_run(uint64_t seed, double tolerance_scale,
                                    char** report_json, int* all_passed);
void sampinfo_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SAMPINFO_H */

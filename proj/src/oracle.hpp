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

#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "depnormal.hpp"
#include "tte.hpp"

// Independent verification engines. Every closed-form information measure
// in the library has a counterpart here that evaluates the defining
// integral by adaptive quadrature or estimates it by seeded Monte Carlo.
// The quadrature paths deliberately avoid the special-function module:
// density normalizers are themselves computed by quadrature (plus exact
// integer factorials), so agreement between the two routes is meaningful.

namespace sampinfo::oracle {

struct QuadratureSettings {
  double relative_tolerance = 1e-8;
  int max_subdivisions = 2000;  // mapped to the refinement depth
  double tail_mass = 1e-10;     // quantile truncation where a domain is cut
  void validate() const;
};

struct QuadratureResult {
  double estimate = 0.0;
  double error_bound = 0.0;
};

struct MonteCarloSettings {
  std::uint64_t seed = 0;
  long long replications = 100000;
  int batches = 20;  // standard errors come from batch means
  void validate() const;
};

struct MonteCarloResult {
  double estimate = 0.0;
  double standard_error = 0.0;
};

// Adaptive quadrature on a finite interval; returns the estimate and a
// conservative absolute error bound through `error_bound`.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings, double* error_bound);

// Adaptive quadrature on (0, infinity): the interval is split at 1 and the
// outer half is folded back by u -> 1/u, which handles both exponential
// and algebraic tails.
double integrate_positive_axis(const std::function<double(double)>& f,
                               const QuadratureSettings& settings,
                               double* error_bound);

// --- Quadrature oracles -------------------------------------------------

// Mutual information between n observations of the time-transformed
// exponential family and its parameter, from the defining integral
// E_s KL(posterior : prior) over the marginal law of the sufficient
// statistic. Matches the closed form within max(tolerance, error bound).
QuadratureResult mi_quadrature_tte(double alpha, int n,
                                   const QuadratureSettings& s = {});

// KL divergence between unit-rate gamma laws with shapes (v+1, v),
// evaluated by quadrature; equals kl_gamma_step(v).
double kl_gamma_quadrature(double v, const QuadratureSettings& s = {});

// -integral f ln f for the gamma(alpha, 1) and unit-scale Pareto laws.
double gamma_entropy_quadrature(double alpha, const QuadratureSettings& s = {});
double pareto_entropy_quadrature(double alpha,
                                 const QuadratureSettings& s = {});

// Mutual information between consecutive order statistics of a uniform
// sample, from the 2-D defining integral. n is capped (cost bound);
// larger n should use the Monte Carlo route.
double mi_quadrature_consecutive_uniform_order_stats(
    int n, int r, const QuadratureSettings& s = {});
inline constexpr int kUniformOrderStatQuadMaxN = 12;

// Mutual information between the parameter and the k-th order statistic
// (1-based) of n exponential lifetimes under a gamma(alpha, beta) prior,
// via the entropy decomposition H(Y) - E_theta H(Y | theta).
QuadratureResult mi_quadrature_theta_order_stat(double alpha, double beta,
                                                int n, int k,
                                                const QuadratureSettings& s = {});

// --- Monte Carlo oracles ------------------------------------------------

// Parameter information for a TTE model, generated through the named
// transform (the estimate is transform-invariant; distinct streams make
// the invariance check non-vacuous).
MonteCarloResult mi_montecarlo_tte(tte::Transform transform,
                                   double transform_param, double alpha,
                                   double beta, int n,
                                   const MonteCarloSettings& s);

enum class MiTarget { parameter, predictive, conditional_dependence, joint };

// Dependent-normal information measures from their defining expectations.
MonteCarloResult mi_montecarlo_depnormal(const depnormal::DepNormalSpec& spec,
                                         MiTarget target,
                                         const MonteCarloSettings& s);

// Normal linear model in rotated coordinates, with integer eigenvalues
// read as cell counts of the ANOVA layout. Supports the parameter and
// predictive targets.
MonteCarloResult mi_montecarlo_linmodel(const linmodel::LinearModelSpec& spec,
                                        std::span<const double> z,
                                        MiTarget target,
                                        const MonteCarloSettings& s);

// Mutual information between the first r order statistics and the next
// one, conditional on the parameter; free of the parent by construction.
enum class OrderStatParent { exponential, weibull };
MonteCarloResult mi_montecarlo_orderstats_consecutive(
    OrderStatParent parent, double weibull_exponent, double theta, int n,
    int r, const MonteCarloSettings& s);

// Unconditional mutual information between the first r order statistics
// and the (r+1)-st, exponential parent with gamma prior.
MonteCarloResult mi_montecarlo_orderstats_next(double alpha, double beta,
                                               int n, int r,
                                               const MonteCarloSettings& s);

// Means of the observed (sample-specific) TTE information measures over
// simulated data; they estimate the corresponding expected measures.
MonteCarloResult mc_mean_observed_param_info(const tte::GammaPriorSpec& prior,
                                             int n,
                                             const MonteCarloSettings& s);
MonteCarloResult mc_mean_observed_predictive_info(
    const tte::GammaPriorSpec& prior, int n, const MonteCarloSettings& s);

}  // namespace sampinfo::oracle

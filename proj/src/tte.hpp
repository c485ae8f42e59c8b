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

#include <optional>
#include <span>

#include "linmodel.hpp"  // InfoTriple

// Information measures for the time-transformed-exponential family under a
// gamma prior on the proportional-hazard parameter. A lifetime Y with
// survival exp(-theta * phi(y)) for a monotone transform phi carries the
// same information about theta as an exponential observation, so every
// expected measure here depends only on the prior shape and the number of
// observations; the transform and the prior rate enter observed,
// data-facing quantities only.

namespace sampinfo::tte {

struct GammaPriorSpec {
  double alpha = 1.0;  // shape
  double beta = 1.0;   // rate
  void validate() const;
};

// n: number of observations (under type II censoring, the number of
// observed failures); s_n: observed sufficient statistic sum_i phi(y_i),
// or the total time on test.
struct TTESampleSpec {
  int n = 0;
  std::optional<double> s_n;
  void validate() const;
};

// Monotone transforms linking the family to the exponential model; used
// only by the data-facing sufficient-statistic helper.
enum class Transform { exponential, weibull, pareto1, extreme_value };

// Expected information about the parameter from n observations:
//   H_G(alpha) - H_G(alpha + n) + psi(alpha + n) - psi(alpha).
// Equals the joint parameter-prediction information; independent of the
// prior rate and of the transform.
double parameter_info(const GammaPriorSpec& prior, int n);

// Same formula at real n > 0: an interpolation for design exploration.
double parameter_info_real(const GammaPriorSpec& prior, double n);

// Evaluates the recursion M(n) = M(n-1) + K_G(alpha + n - 1), M(0) = 0.
// Equals parameter_info for all n.
double parameter_info_recursive(const GammaPriorSpec& prior, int n);

// Expected information about a future outcome:
//   H_P(alpha) - H_P(alpha + n) - psi(alpha + n) + psi(alpha).
// Lies in [0, parameter_info]; tends to kl_gamma_step(alpha) as n grows.
double predictive_info(const GammaPriorSpec& prior, int n);
double predictive_info_real(const GammaPriorSpec& prior, double n);

// Observed (sample-specific) entropy changes; may be negative.
//   parameter:  H_G(a) - H_G(a+n) + ln(1 + s_n/beta)
//   predictive: H_P(a) - H_P(a+n) - ln(1 + s_n/beta)
double observed_param_info(const GammaPriorSpec& prior,
                           const TTESampleSpec& sample);
double observed_predictive_info(const GammaPriorSpec& prior,
                                const TTESampleSpec& sample);

// The three-way decomposition: parameter info splits into predictive info
// plus the parameter info under the shape-incremented prior.
struct Decomposition {
  double parameter = 0.0;
  double predictive = 0.0;
  double parameter_shifted = 0.0;  // parameter info under shape alpha + 1
  double residual = 0.0;           // parameter - predictive - parameter_shifted
};
Decomposition decomposition(const GammaPriorSpec& prior, int n);

linmodel::InfoTriple info_triple(const GammaPriorSpec& prior, int n);

// Information lost by stopping after r of n failures.
struct CensoringLoss {
  double param_loss = 0.0;
  double predictive_loss = 0.0;
};
CensoringLoss censoring_loss(const GammaPriorSpec& prior, int n, int r);

// sum_i phi(y_i) for raw observations. `transform_param` is the Weibull
// exponent q, the Pareto threshold a, and is ignored for the exponential
// and extreme-value transforms.
double suff_stat(Transform t, double transform_param,
                 std::span<const double> data);

}  // namespace sampinfo::tte

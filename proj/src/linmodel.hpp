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

#include <span>
#include <vector>

// Information measures for the conditionally independent normal linear
// model in rotated coordinates. The model is described by the spectrum of
// the rotated design, a diagonal prior covariance, and the noise-to-prior
// variance ratio eta; every measure below is invariant under the rotation,
// so callers with a raw design matrix pre-compute its spectrum.

namespace sampinfo::linmodel {

// The universal result record: information about the parameter, about a
// future outcome, and about both jointly, in nats.
// joint = parameter + dependence always holds; dependence is zero for
// conditionally independent models. `predictive` is NaN when a module
// computes no closed form for it.
struct InfoTriple {
  double parameter = 0.0;
  double predictive = 0.0;
  double joint = 0.0;
  double dependence = 0.0;
};

struct LinearModelSpec {
  std::vector<double> eigenvalues;       // lambda_j >= 0, rotated design
                                         // spectrum; 0 = unsampled direction
  std::vector<double> prior_variances;   // v_0j > 0, diagonal prior covariance
  double eta = 1.0;                      // sampling-to-prior variance ratio
  double prior_scale = 1.0;              // sigma_0^2; informational only
  std::vector<double> prior_mean;        // optional; entropy is location invariant

  std::size_t dim() const { return eigenvalues.size(); }
  // Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

// (1/2) sum_j ln(1 + v_0j lambda_j / eta). For this model the observed
// entropy change equals its expectation for every sample, so the returned
// value is both the observed and the expected measure.
double parameter_info(const LinearModelSpec& spec);

// (1/2) ln[(z'V0 z / eta + 1) / (z'V1 z + 1)] with V1 = (eta V0^-1 + Lambda)^-1.
// Never exceeds parameter_info(spec).
double predictive_info(const LinearModelSpec& spec, std::span<const double> z);

InfoTriple joint_info(const LinearModelSpec& spec, std::span<const double> z);

// Convenience wrapper iterating the scalar formula over several points.
std::vector<double> predictive_info_multi(
    const LinearModelSpec& spec, const std::vector<std::vector<double>>& points);

// w1 * parameter + w2 * predictive, together with the regrouping
// w1 * (parameter - predictive) + (w1 + w2) * predictive.
struct WeightedUtility {
  double utility = 0.0;
  double parameter = 0.0;
  double predictive = 0.0;
  double conditional_term = 0.0;  // parameter - predictive
  double w1 = 0.0;
  double w2 = 0.0;
  double regrouped() const {
    return w1 * conditional_term + (w1 + w2) * predictive;
  }
};
WeightedUtility weighted_utility(const LinearModelSpec& spec,
                                 std::span<const double> z, double w1,
                                 double w2);

// sqrt(lambda_max / lambda_min) >= 1.
double condition_number(const LinearModelSpec& spec);

namespace detail {
// Raw-formula variants used by the allocation optimizers, where boundary
// allocations (lambda_j == 0) are legitimate evaluation points.
double parameter_info_raw(std::span<const double> lambda,
                          std::span<const double> v0, double eta);
double predictive_info_raw(std::span<const double> lambda,
                           std::span<const double> v0, double eta,
                           std::span<const double> z);
}  // namespace detail

}  // namespace sampinfo::linmodel

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

#include <functional>
#include <span>
#include <vector>

// Constrained-allocation optimizers for the normal linear model: sample
// allocation across ANOVA-type cells (maximizing parameter or predictive
// information for a fixed total sample size) and prior-variance allocation
// across rotated components (maximizing parameter information for a fixed
// total prior variance). All solutions are continuous relaxations of the
// first-order conditions; integer rounding is the caller's concern.

namespace sampinfo::design {

struct AllocationResult {
  std::vector<double> weights;    // n_j* or v_0j*; sums to the budget
  double objective_value = 0.0;   // nats; NaN when infeasible
  bool feasible = true;
  // The stationary point exists only when the leading weight exceeds this
  // bound (equivalently, when every weight is positive). Reported even when
  // violated; infeasibility is data, not failure.
  double binding_minimum = 0.0;
  bool continuous = true;         // always true
  bool used_fallback = false;     // constrained maximization replaced the
                                  // closed form (zero covariate entries)
};

// Sample allocation maximizing parameter (joint) information subject to
// sum n_j = n:
//   n_1* = n/p + (eta/p) sum_{j>=2} (1/v_0j - 1/v_01),
//   n_j* = n_1* - eta (1/v_0j - 1/v_01).
AllocationResult optimal_sample_allocation_parameter(
    double n, double eta, std::span<const double> prior_variances);

// Sample allocation maximizing predictive information at covariate point z.
// Stationary point: n_j* = t |z_j| - eta / v_0j with
// t = (n + eta sum_j 1/v_0j) / sum_j |z_j|.
// When some z_j == 0 the closed form is unavailable, and when the
// stationary point leaves the simplex the minimum-sample-size condition is
// violated (feasible = false); in both cases a constrained maximization
// over the simplex supplies the weights and is flagged as a fallback.
AllocationResult optimal_sample_allocation_predictive(
    double n, double eta, std::span<const double> prior_variances,
    std::span<const double> z);

// Prior-variance allocation maximizing parameter information subject to
// sum v_0j = c, for eigenvalues sorted in descending order:
//   v_01* = c/p + (eta/p) sum_{j>=2} (1/lambda_j - 1/lambda_1),
//   v_0j* = v_01* - eta (1/lambda_j - 1/lambda_1).
AllocationResult optimal_prior_variance_allocation(
    double c, double eta, std::span<const double> eigenvalues_descending);

// Residuals of the condition-index identity
//   (lambda_1 v_1 + eta) / (lambda_j v_j + eta) - lambda_1 / lambda_j
// for j >= 2; all zero at the optimal prior-variance allocation.
std::vector<double> condition_index_residuals(
    std::span<const double> eigenvalues, std::span<const double> weights,
    double eta);

// Rounds a continuous allocation to integers: enumerates the floor/ceil
// neighbors that conserve the (integer) budget and re-evaluates the
// objective on each, returning the best.
struct RoundedAllocation {
  std::vector<double> weights;
  double objective_value = 0.0;
};
RoundedAllocation round_allocation(
    std::span<const double> weights, double budget,
    const std::function<double(std::span<const double>)>& objective);

}  // namespace sampinfo::design

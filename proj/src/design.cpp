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

#include "design.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "linmodel.hpp"

namespace sampinfo::design {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_budget(double b, const char* name) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

void check_positive_list(std::span<const double> v, const char* name) {
  if (v.empty()) throw std::invalid_argument(std::string(name) + " is empty");
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  }
}

// Stationary allocation for the predictive objective restricted to the
// index set `active`, zeros elsewhere. Returns false when some active
// weight comes out non-positive.
bool predictive_stationary_point(double n, double eta,
                                 std::span<const double> v0,
                                 std::span<const double> z,
                                 const std::vector<bool>& active,
                                 std::vector<double>& weights) {
  double sum_abs_z = 0.0;
  double sum_inv_v = 0.0;
  for (std::size_t j = 0; j < v0.size(); ++j) {
    if (!active[j]) continue;
    sum_abs_z += std::abs(z[j]);
    sum_inv_v += 1.0 / v0[j];
  }
  const double t = (n + eta * sum_inv_v) / sum_abs_z;
  bool ok = true;
  for (std::size_t j = 0; j < v0.size(); ++j) {
    if (!active[j]) {
      weights[j] = 0.0;
      continue;
    }
    weights[j] = t * std::abs(z[j]) - eta / v0[j];
    if (!(weights[j] > 0.0)) ok = false;
  }
  return ok;
}

}  // namespace

AllocationResult optimal_sample_allocation_parameter(
    double n, double eta, std::span<const double> prior_variances) {
  check_budget(n, "sample budget");
  check_budget(eta, "eta");
  check_positive_list(prior_variances, "prior variances");
  const std::size_t p = prior_variances.size();

  AllocationResult r;
  r.weights.resize(p);
  const double inv_v1 = 1.0 / prior_variances[0];
  double sum_diff = 0.0;
  double binding = 0.0;
  for (std::size_t j = 1; j < p; ++j) {
    const double d = 1.0 / prior_variances[j] - inv_v1;
    sum_diff += d;
    binding = std::max(binding, eta * d);
  }
  const double n1 = n / static_cast<double>(p) +
                    eta / static_cast<double>(p) * sum_diff;
  r.weights[0] = n1;
  for (std::size_t j = 1; j < p; ++j) {
    r.weights[j] = n1 - eta * (1.0 / prior_variances[j] - inv_v1);
  }
  r.binding_minimum = binding;
  r.feasible = n1 > binding && n1 > 0.0;
  r.objective_value =
      r.feasible ? linmodel::detail::parameter_info_raw(r.weights,
                                                        prior_variances, eta)
                 : kNaN;
  return r;
}

AllocationResult optimal_sample_allocation_predictive(
    double n, double eta, std::span<const double> prior_variances,
    std::span<const double> z) {
  check_budget(n, "sample budget");
  check_budget(eta, "eta");
  check_positive_list(prior_variances, "prior variances");
  const std::size_t p = prior_variances.size();
  if (z.size() != p) {
    throw std::invalid_argument("covariate point dimension mismatch");
  }
  bool any_nonzero = false;
  bool any_zero = false;
  for (double v : z) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("covariate point must be finite");
    }
    (v == 0.0 ? any_zero : any_nonzero) = true;
  }
  if (!any_nonzero) {
    throw std::invalid_argument(
        "covariate point is identically zero; prediction there carries no "
        "model content to optimize for");
  }

  AllocationResult r;
  r.weights.resize(p);

  bool interior = false;
  if (!any_zero) {
    // Closed form on the full index set.
    std::vector<bool> all(p, true);
    interior =
        predictive_stationary_point(n, eta, prior_variances, z, all, r.weights);
    const double inv_v1 = 1.0 / prior_variances[0];
    const double az1 = std::abs(z[0]);
    double binding = 0.0;
    for (std::size_t j = 1; j < p; ++j) {
      const double azj = std::abs(z[j]);
      binding = std::max(binding, eta / azj *
                                      (az1 / prior_variances[j] - azj * inv_v1));
    }
    r.binding_minimum = binding;
    if (interior) {
      r.feasible = true;
      r.objective_value = linmodel::detail::predictive_info_raw(
          r.weights, prior_variances, eta, z);
      return r;
    }
  }

  // Either a zero covariate entry breaks the closed form (it divides by
  // |z_j|) or the stationary point leaves the simplex. Constrained
  // maximization instead: zero-gain and non-positive coordinates are
  // pinned to the boundary and the stationary point is re-solved on the
  // rest. `feasible` keeps the proposition's interior minimum-sample-size
  // reading; the returned weights always solve the constrained problem.
  std::vector<bool> active(p);
  for (std::size_t j = 0; j < p; ++j) active[j] = z[j] != 0.0;
  while (true) {
    const bool ok = predictive_stationary_point(n, eta, prior_variances, z,
                                                active, r.weights);
    if (ok) break;
    bool removed = false;
    for (std::size_t j = 0; j < p; ++j) {
      if (active[j] && z[j] != 0.0 && !(r.weights[j] > 0.0)) {
        active[j] = false;
        removed = true;
      }
    }
    if (!removed) break;
    if (std::none_of(active.begin(), active.end(), [](bool b) { return b; })) {
      throw std::logic_error("allocation fallback eliminated all coordinates");
    }
  }
  for (double& w : r.weights) w = std::max(w, 0.0);
  r.used_fallback = true;
  r.feasible = any_zero ? true : interior;
  r.objective_value = linmodel::detail::predictive_info_raw(
      r.weights, prior_variances, eta, z);
  return r;
}

AllocationResult optimal_prior_variance_allocation(
    double c, double eta, std::span<const double> eigenvalues_descending) {
  check_budget(c, "prior variance budget");
  check_budget(eta, "eta");
  check_positive_list(eigenvalues_descending, "eigenvalues");
  const std::size_t p = eigenvalues_descending.size();
  for (std::size_t j = 1; j < p; ++j) {
    if (eigenvalues_descending[j] > eigenvalues_descending[j - 1]) {
      throw std::invalid_argument(
          "eigenvalues must be sorted in descending order");
    }
  }

  AllocationResult r;
  r.weights.resize(p);
  const double inv_l1 = 1.0 / eigenvalues_descending[0];
  double sum_diff = 0.0;
  for (std::size_t j = 1; j < p; ++j) {
    sum_diff += 1.0 / eigenvalues_descending[j] - inv_l1;
  }
  const double v1 = c / static_cast<double>(p) +
                    eta / static_cast<double>(p) * sum_diff;
  r.weights[0] = v1;
  for (std::size_t j = 1; j < p; ++j) {
    r.weights[j] = v1 - eta * (1.0 / eigenvalues_descending[j] - inv_l1);
  }
  r.binding_minimum =
      eta * (1.0 / eigenvalues_descending[p - 1] - inv_l1);
  r.feasible = v1 > r.binding_minimum && v1 > 0.0;
  r.objective_value =
      r.feasible ? linmodel::detail::parameter_info_raw(
                       eigenvalues_descending, r.weights, eta)
                 : kNaN;
  return r;
}

std::vector<double> condition_index_residuals(
    std::span<const double> eigenvalues, std::span<const double> weights,
    double eta) {
  if (eigenvalues.size() != weights.size() || eigenvalues.empty()) {
    throw std::invalid_argument("condition_index_residuals: size mismatch");
  }
  std::vector<double> out;
  out.reserve(eigenvalues.size() - 1);
  const double top = eigenvalues[0] * weights[0] + eta;
  for (std::size_t j = 1; j < eigenvalues.size(); ++j) {
    out.push_back(top / (eigenvalues[j] * weights[j] + eta) -
                  eigenvalues[0] / eigenvalues[j]);
  }
  return out;
}

RoundedAllocation round_allocation(
    std::span<const double> weights, double budget,
    const std::function<double(std::span<const double>)>& objective) {
  const std::size_t p = weights.size();
  if (p == 0 || p > 20) {
    throw std::invalid_argument("round_allocation supports 1..20 components");
  }
  const long long target = std::llround(budget);
  RoundedAllocation best;
  best.objective_value = -std::numeric_limits<double>::infinity();
  std::vector<double> cand(p);
  // Every floor/ceil combination; keep those conserving the budget.
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    long long sum = 0;
    bool valid = true;
    for (std::size_t j = 0; j < p; ++j) {
      const double base = std::floor(weights[j]);
      const double w = (mask >> j & 1) ? base + 1.0 : base;
      if (w < 0.0) {
        valid = false;
        break;
      }
      cand[j] = w;
      sum += static_cast<long long>(w);
    }
    if (!valid || sum != target) continue;
    const double obj = objective(cand);
    if (obj > best.objective_value) {
      best.objective_value = obj;
      best.weights = cand;
    }
  }
  if (best.weights.empty()) {
    throw std::domain_error(
        "no floor/ceil integerization conserves the budget (non-integer "
        "budget?)");
  }
  return best;
}

}  // namespace sampinfo::design

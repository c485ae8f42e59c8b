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

#include "linmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sampinfo::linmodel {

namespace {

void check_point(const LinearModelSpec& spec, std::span<const double> z) {
  if (z.size() != spec.dim()) {
    throw std::invalid_argument("prediction point dimension mismatch");
  }
  for (double v : z) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("prediction point must be finite");
    }
  }
}

double clamp_nonneg(double x) { return x < 0.0 ? 0.0 : x; }

}  // namespace

void LinearModelSpec::validate() const {
  const std::size_t p = eigenvalues.size();
  if (p == 0) throw std::invalid_argument("model dimension must be >= 1");
  if (prior_variances.size() != p) {
    throw std::invalid_argument("eigenvalues and prior variances differ in length");
  }
  if (!prior_mean.empty() && prior_mean.size() != p) {
    throw std::invalid_argument("prior mean has wrong length");
  }
  // Zero eigenvalues denote unsampled directions (boundary allocations);
  // they contribute nothing to either measure.
  for (double l : eigenvalues) {
    if (!(l >= 0.0) || !std::isfinite(l)) {
      throw std::invalid_argument("design eigenvalues must be nonnegative");
    }
  }
  for (double v : prior_variances) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("prior variances must be positive");
    }
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("eta must be positive");
  }
  if (!(prior_scale > 0.0) || !std::isfinite(prior_scale)) {
    throw std::invalid_argument("prior scale must be positive");
  }
}

namespace detail {

double parameter_info_raw(std::span<const double> lambda,
                          std::span<const double> v0, double eta) {
  double sum = 0.0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    sum += std::log1p(v0[j] * lambda[j] / eta);
  }
  return 0.5 * sum;
}

double predictive_info_raw(std::span<const double> lambda,
                           std::span<const double> v0, double eta,
                           std::span<const double> z) {
  double zv0z = 0.0;   // z'V0 z
  double zv1z = 0.0;   // z'V1 z with V1 = (eta V0^-1 + Lambda)^-1
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    const double z2 = z[j] * z[j];
    zv0z += z2 * v0[j];
    zv1z += z2 * v0[j] / (eta + v0[j] * lambda[j]);
  }
  return clamp_nonneg(0.5 * std::log((zv0z / eta + 1.0) / (zv1z + 1.0)));
}

}  // namespace detail

double parameter_info(const LinearModelSpec& spec) {
  spec.validate();
  return detail::parameter_info_raw(spec.eigenvalues, spec.prior_variances,
                                    spec.eta);
}

double predictive_info(const LinearModelSpec& spec, std::span<const double> z) {
  spec.validate();
  check_point(spec, z);
  return detail::predictive_info_raw(spec.eigenvalues, spec.prior_variances,
                                     spec.eta, z);
}

InfoTriple joint_info(const LinearModelSpec& spec, std::span<const double> z) {
  InfoTriple t;
  t.parameter = parameter_info(spec);
  t.predictive = predictive_info(spec, z);
  t.joint = t.parameter;  // conditionally independent: joint == parameter
  t.dependence = 0.0;
  return t;
}

std::vector<double> predictive_info_multi(
    const LinearModelSpec& spec,
    const std::vector<std::vector<double>>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(predictive_info(spec, z));
  return out;
}

WeightedUtility weighted_utility(const LinearModelSpec& spec,
                                 std::span<const double> z, double w1,
                                 double w2) {
  if (!(w1 >= 0.0) || !(w2 >= 0.0)) {
    throw std::invalid_argument("utility weights must be nonnegative");
  }
  WeightedUtility u;
  u.parameter = parameter_info(spec);
  u.predictive = predictive_info(spec, z);
  u.conditional_term = u.parameter - u.predictive;
  u.w1 = w1;
  u.w2 = w2;
  u.utility = w1 * u.parameter + w2 * u.predictive;
  return u;
}

double condition_number(const LinearModelSpec& spec) {
  spec.validate();
  const auto [mn, mx] = std::minmax_element(spec.eigenvalues.begin(),
                                            spec.eigenvalues.end());
  if (!(*mn > 0.0)) {
    throw std::domain_error("condition number requires a full-rank design");
  }
  return std::sqrt(*mx / *mn);
}

}  // namespace sampinfo::linmodel

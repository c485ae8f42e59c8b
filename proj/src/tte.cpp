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

#include "tte.hpp"

#include <cmath>
#include <stdexcept>

#include "specfn.hpp"

namespace sampinfo::tte {

using specfn::digamma;
using specfn::gamma_entropy;
using specfn::kl_gamma_step;
using specfn::pareto_entropy;

void GammaPriorSpec::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error(
        "prior shape must be strictly positive; the improper limit "
        "alpha -> 0 is outside the supported domain");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::domain_error("prior rate must be strictly positive");
  }
}

void TTESampleSpec::validate() const {
  if (n < 0) throw std::invalid_argument("sample size must be >= 0");
  if (s_n && (!(*s_n >= 0.0) || !std::isfinite(*s_n))) {
    throw std::invalid_argument("sufficient statistic must be finite and >= 0");
  }
}

double parameter_info_real(const GammaPriorSpec& prior, double n) {
  prior.validate();
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("n must be finite and >= 0");
  }
  if (n == 0.0) return 0.0;
  const double a = prior.alpha;
  return gamma_entropy(a) - gamma_entropy(a + n) + digamma(a + n) - digamma(a);
}

double parameter_info(const GammaPriorSpec& prior, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return parameter_info_real(prior, static_cast<double>(n));
}

double parameter_info_recursive(const GammaPriorSpec& prior, int n) {
  prior.validate();
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  double m = 0.0;
  for (int k = 0; k < n; ++k) {
    m += kl_gamma_step(prior.alpha + static_cast<double>(k));
  }
  return m;
}

double predictive_info_real(const GammaPriorSpec& prior, double n) {
  prior.validate();
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("n must be finite and >= 0");
  }
  if (n == 0.0) return 0.0;
  const double a = prior.alpha;
  const double value =
      pareto_entropy(a) - pareto_entropy(a + n) - digamma(a + n) + digamma(a);
  return value < 0.0 ? 0.0 : value;
}

double predictive_info(const GammaPriorSpec& prior, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  return predictive_info_real(prior, static_cast<double>(n));
}

double observed_param_info(const GammaPriorSpec& prior,
                           const TTESampleSpec& sample) {
  prior.validate();
  sample.validate();
  if (!sample.s_n) {
    throw std::invalid_argument(
        "observed information requires the sufficient statistic");
  }
  const double a = prior.alpha;
  const double n = sample.n;
  return gamma_entropy(a) - gamma_entropy(a + n) +
         std::log1p(*sample.s_n / prior.beta);
}

double observed_predictive_info(const GammaPriorSpec& prior,
                                const TTESampleSpec& sample) {
  prior.validate();
  sample.validate();
  if (!sample.s_n) {
    throw std::invalid_argument(
        "observed information requires the sufficient statistic");
  }
  const double a = prior.alpha;
  const double n = sample.n;
  return pareto_entropy(a) - pareto_entropy(a + n) -
         std::log1p(*sample.s_n / prior.beta);
}

Decomposition decomposition(const GammaPriorSpec& prior, int n) {
  Decomposition d;
  d.parameter = parameter_info(prior, n);
  d.predictive = predictive_info(prior, n);
  GammaPriorSpec shifted{prior.alpha + 1.0, prior.beta};
  d.parameter_shifted = parameter_info(shifted, n);
  d.residual = d.parameter - d.predictive - d.parameter_shifted;
  return d;
}

linmodel::InfoTriple info_triple(const GammaPriorSpec& prior, int n) {
  linmodel::InfoTriple t;
  t.parameter = parameter_info(prior, n);
  t.predictive = predictive_info(prior, n);
  t.joint = t.parameter;
  t.dependence = 0.0;
  return t;
}

CensoringLoss censoring_loss(const GammaPriorSpec& prior, int n, int r) {
  prior.validate();
  if (r < 1 || r > n) {
    throw std::domain_error("censoring requires 1 <= r <= n");
  }
  CensoringLoss loss;
  loss.param_loss = parameter_info(prior, n) - parameter_info(prior, r);
  loss.predictive_loss = predictive_info(prior, n) - predictive_info(prior, r);
  if (loss.param_loss < 0.0) loss.param_loss = 0.0;
  if (loss.predictive_loss < 0.0) loss.predictive_loss = 0.0;
  return loss;
}

double suff_stat(Transform t, double transform_param,
                 std::span<const double> data) {
  double s = 0.0;
  switch (t) {
    case Transform::exponential:
      for (double y : data) {
        if (!(y >= 0.0)) throw std::domain_error("lifetimes must be >= 0");
        s += y;
      }
      return s;
    case Transform::weibull:
      if (!(transform_param > 0.0)) {
        throw std::domain_error("Weibull exponent must be positive");
      }
      for (double y : data) {
        if (!(y >= 0.0)) throw std::domain_error("lifetimes must be >= 0");
        s += std::pow(y, transform_param);
      }
      return s;
    case Transform::pareto1:
      if (!(transform_param > 0.0)) {
        throw std::domain_error("Pareto threshold must be positive");
      }
      for (double y : data) {
        if (!(y >= transform_param)) {
          throw std::domain_error("observations must be >= the threshold");
        }
        s += std::log(y / transform_param);
      }
      return s;
    case Transform::extreme_value:
      for (double y : data) {
        if (!std::isfinite(y)) throw std::domain_error("non-finite observation");
        s += std::exp(y);
      }
      return s;
  }
  throw std::invalid_argument("unknown transform");
}

}  // namespace sampinfo::tte

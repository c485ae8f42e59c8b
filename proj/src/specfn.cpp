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

#include "specfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sampinfo::specfn {

namespace {

void require_positive(double x, const char* name) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(name) +
                            " requires a finite, strictly positive argument");
  }
}

// Asymptotic tail of psi(x) for x >= 10: ln x - 1/(2x) - sum B_2k/(2k x^2k).
double digamma_asymptotic(double x) {
  const double u = 1.0 / (x * x);
  // B_2k/(2k) for k = 1..7
  const double tail =
      u * (1.0 / 12.0 -
           u * (1.0 / 120.0 -
                u * (1.0 / 252.0 -
                     u * (1.0 / 240.0 -
                          u * (1.0 / 132.0 -
                               u * (691.0 / 32760.0 - u * (1.0 / 12.0)))))));
  return std::log(x) - 0.5 / x - tail;
}

// Asymptotic tail of psi'(x) for x >= 10.
double trigamma_asymptotic(double x) {
  const double u = 1.0 / (x * x);
  const double tail =
      u * (1.0 / 6.0 -
           u * (1.0 / 30.0 -
                u * (1.0 / 42.0 -
                     u * (1.0 / 30.0 -
                          u * (5.0 / 66.0 -
                               u * (691.0 / 2730.0 - u * (7.0 / 6.0)))))));
  return 1.0 / x + 0.5 / (x * x) + tail / x;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  return std::lgamma(x);
}

double digamma(double x) {
  require_positive(x, "digamma");
  // Shift into the asymptotic region with psi(x) = psi(x+1) - 1/x.
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  return shift + digamma_asymptotic(x);
}

double trigamma(double x) {
  require_positive(x, "trigamma");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / (x * x);
    x += 1.0;
  }
  return shift + trigamma_asymptotic(x);
}

double log_beta(double a, double b) {
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double gamma_entropy(double alpha) {
  require_positive(alpha, "gamma_entropy");
  return log_gamma(alpha) - (alpha - 1.0) * digamma(alpha) + alpha;
}

double pareto_entropy(double alpha) {
  require_positive(alpha, "pareto_entropy");
  return 1.0 / alpha - std::log(alpha) + 1.0;
}

double kl_gamma_step(double v) {
  require_positive(v, "kl_gamma_step");
  const double value = 1.0 / v + digamma(v) - std::log(v);
  return value < 0.0 ? 0.0 : value;  // guard rounding; the value is >= 0
}

}  // namespace sampinfo::specfn

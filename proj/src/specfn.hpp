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

// Special functions and entropy primitives shared by every other module.
// All functions are pure, take strictly positive arguments and throw
// std::domain_error otherwise. Information values are in nats.

namespace sampinfo::specfn {

inline constexpr double euler_gamma = 0.57721566490153286060651209;

// ln Gamma(x) for x > 0.
double log_gamma(double x);

// psi(x) = d/dx ln Gamma(x), absolute error below 1e-12 on x > 0.
double digamma(double x);

// psi'(x) = sum_k 1/(x+k)^2, absolute error below 1e-10 on x > 0.
double trigamma(double x);

// ln B(a, b), composed exactly as log_gamma(a) + log_gamma(b) - log_gamma(a+b).
double log_beta(double a, double b);

// Entropy of a gamma distribution with shape alpha and unit rate:
//   H(alpha) = ln Gamma(alpha) - (alpha - 1) psi(alpha) + alpha.
// For rate beta the caller subtracts ln(beta).
double gamma_entropy(double alpha);

// Entropy of a Lomax (Pareto type II) distribution with shape alpha and
// unit scale: H(alpha) = 1/alpha - ln(alpha) + 1.
double pareto_entropy(double alpha);

// Kullback-Leibler divergence between gamma distributions whose shapes
// differ by one (same rate): K(v) = 1/v + psi(v) - ln(v) >= 0.
// Strictly decreasing in v and -> 0 as v -> infinity.
double kl_gamma_step(double v);

}  // namespace sampinfo::specfn

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

#include <cstddef>
#include <vector>

// Gaussian mutual-information primitives: information from a squared
// multiple correlation, the inverse-correlation-matrix route to the same
// quantity, and the marginal (predictive) correlation obtained when a
// latent location with noise-to-prior ratio eta is integrated out.

namespace sampinfo::gaussmi {

// Symmetric correlation matrix with unit diagonal. Positive definiteness
// is established by factorization success at the point of use.
class CorrelationMatrix {
 public:
  // `entries` is row-major n*n. Throws std::invalid_argument on asymmetry,
  // a non-unit diagonal, or out-of-range entries.
  CorrelationMatrix(std::vector<double> entries, std::size_t n);

  std::size_t dim() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  const std::vector<double>& entries() const { return entries_; }

 private:
  std::vector<double> entries_;
  std::size_t n_;
};

// -(1/2) ln(1 - r2) for r2 in [0, 1); throws std::domain_error otherwise.
double mi_from_multiple_correlation(double r_squared);

// (1/2) ln [C^{-1}]_{kk}, the mutual information between variable `index`
// (0-based) and the rest. Throws not_positive_definite when the Cholesky
// factorization fails.
double mi_via_inverse_element(const CorrelationMatrix& c, std::size_t index);

// Diagonal element of the inverse, exposed for squared-multiple-correlation
// cross-checks: R^2 = 1 - 1/[C^{-1}]_{kk}.
double inverse_diagonal_element(const CorrelationMatrix& c, std::size_t index);

// Marginal correlation between an observation and a future outcome after
// the latent location is integrated out:
//   rho_p = (1 + eta * rho_conditional) / (1 + eta),
// where rho_conditional in [0, 1] is the correlation given the location
// and eta > 0 is the noise-to-prior variance ratio.
double predictive_correlation(double rho_conditional, double eta);

}  // namespace sampinfo::gaussmi

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

#include "gaussmi.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace sampinfo::gaussmi {

CorrelationMatrix::CorrelationMatrix(std::vector<double> entries,
                                     std::size_t n)
    : entries_(std::move(entries)), n_(n) {
  if (n_ == 0 || entries_.size() != n_ * n_) {
    throw std::invalid_argument("correlation matrix: bad dimensions");
  }
  constexpr double tol = 1e-12;
  for (std::size_t i = 0; i < n_; ++i) {
    if (std::abs(entries_[i * n_ + i] - 1.0) > tol) {
      throw std::invalid_argument("correlation matrix: diagonal must be 1");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = entries_[i * n_ + j];
      if (!std::isfinite(v) || std::abs(v) > 1.0 + tol) {
        throw std::invalid_argument("correlation matrix: entry out of range");
      }
      if (std::abs(v - entries_[j * n_ + i]) > tol) {
        throw std::invalid_argument("correlation matrix: not symmetric");
      }
    }
  }
}

double mi_from_multiple_correlation(double r_squared) {
  if (!(r_squared >= 0.0) || r_squared >= 1.0) {
    throw std::domain_error(
        "squared multiple correlation must lie in [0, 1); values outside "
        "signal a non-positive-definite correlation structure upstream");
  }
  const double value = -0.5 * std::log1p(-r_squared);
  return value < 0.0 ? 0.0 : value;
}

double inverse_diagonal_element(const CorrelationMatrix& c,
                                std::size_t index) {
  const std::size_t n = c.dim();
  if (index >= n) {
    throw std::invalid_argument("inverse_diagonal_element: index out of range");
  }
  Eigen::Map<const Eigen::MatrixXd> m(c.entries().data(),
                                      static_cast<Eigen::Index>(n),
                                      static_cast<Eigen::Index>(n));
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    throw not_positive_definite(
        "correlation matrix is not positive definite (Cholesky failed)");
  }
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(index)) = 1.0;
  return llt.solve(e)(static_cast<Eigen::Index>(index));
}

double mi_via_inverse_element(const CorrelationMatrix& c, std::size_t index) {
  const double d = inverse_diagonal_element(c, index);
  // [C^{-1}]_{kk} >= 1 for any correlation matrix.
  const double value = 0.5 * std::log(d);
  return value < 0.0 ? 0.0 : value;
}

double predictive_correlation(double rho_conditional, double eta) {
  if (!(rho_conditional >= 0.0) || rho_conditional > 1.0 ||
      !std::isfinite(rho_conditional)) {
    throw std::domain_error("predictive_correlation: rho must be in [0, 1]");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::domain_error("predictive_correlation: eta must be positive");
  }
  return (1.0 + eta * rho_conditional) / (1.0 + eta);
}

}  // namespace sampinfo::gaussmi

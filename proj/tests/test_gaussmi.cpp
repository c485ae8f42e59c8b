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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

#include "errors.hpp"
#include "gaussmi.hpp"

using namespace sampinfo::gaussmi;
using sampinfo::not_positive_definite;

namespace {

CorrelationMatrix from_eigen(const Eigen::MatrixXd& m) {
  std::vector<double> flat(m.data(), m.data() + m.size());
  return CorrelationMatrix(std::move(flat),
                           static_cast<std::size_t>(m.rows()));
}

Eigen::MatrixXd equicorrelated(int n, double rho) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, rho);
  m.diagonal().setOnes();
  return m;
}

}  // namespace

TEST_CASE("mi from multiple correlation") {
  CHECK(mi_from_multiple_correlation(0.0) == 0.0);
  CHECK(mi_from_multiple_correlation(0.75) ==
        doctest::Approx(0.5 * std::log(4.0)).epsilon(1e-14));
  // Uncorrelated-family predictive term at n = 3, eta = 0.5.
  const double r2 = 3.0 / (1.5 * 3.5);
  CHECK(mi_from_multiple_correlation(r2) ==
        doctest::Approx(0.42364893019360184).epsilon(1e-12));
  CHECK_THROWS_AS(mi_from_multiple_correlation(1.0), std::domain_error);
  CHECK_THROWS_AS(mi_from_multiple_correlation(-0.1), std::domain_error);
  CHECK_THROWS_AS(mi_from_multiple_correlation(1.5), std::domain_error);
}

TEST_CASE("inverse-element route on small matrices") {
  CHECK(mi_via_inverse_element(from_eigen(Eigen::MatrixXd::Identity(3, 3)), 0) ==
        0.0);
  CHECK(mi_via_inverse_element(from_eigen(Eigen::MatrixXd::Identity(5, 5)), 4) ==
        0.0);
  // 2x2 with off-diagonal 0.6: -(1/2) ln(1 - 0.36).
  Eigen::MatrixXd two(2, 2);
  two << 1.0, 0.6, 0.6, 1.0;
  CHECK(mi_via_inverse_element(from_eigen(two), 1) ==
        doctest::Approx(-0.5 * std::log1p(-0.36)).epsilon(1e-12));
  // 4x4 equicorrelated with rho = 0.5 at the last index matches the
  // closed multiple-correlation route.
  const double rho = 0.5;
  const double r2 = 3.0 * rho * rho / (1.0 + 2.0 * rho);
  CHECK(mi_via_inverse_element(from_eigen(equicorrelated(4, rho)), 3) ==
        doctest::Approx(mi_from_multiple_correlation(r2)).epsilon(1e-12));
}

TEST_CASE("two routes agree on random positive definite matrices") {
  std::mt19937 gen(20260810);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 7);  // up to 8
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = normal(gen);
    }
    Eigen::MatrixXd s = a * a.transpose() + 0.5 * Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd d = s.diagonal().array().rsqrt();
    Eigen::MatrixXd c = d.asDiagonal() * s * d.asDiagonal();
    c = 0.5 * (c + c.transpose());
    c.diagonal().setOnes();
    const int k = static_cast<int>(gen() % n);
    // Squared multiple correlation by the regression (block) route.
    Eigen::MatrixXd rest(n - 1, n - 1);
    Eigen::VectorXd cross(n - 1);
    int ii = 0;
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        rest(ii, jj++) = c(i, j);
      }
      cross(ii++) = c(i, k);
    }
    const double r2 = cross.dot(rest.llt().solve(cross));
    const double via_inverse =
        mi_via_inverse_element(from_eigen(c), static_cast<std::size_t>(k));
    CHECK(std::abs(via_inverse - mi_from_multiple_correlation(r2)) < 1e-10);
  }
}

TEST_CASE("factorization failure is a typed error") {
  Eigen::MatrixXd bad(3, 3);
  bad << 1.0, 0.9, -0.9,
         0.9, 1.0, 0.9,
        -0.9, 0.9, 1.0;
  CHECK_THROWS_AS(mi_via_inverse_element(from_eigen(bad), 0),
                  not_positive_definite);
}

TEST_CASE("correlation matrix validation") {
  CHECK_THROWS_AS(CorrelationMatrix({1.0, 0.5, 0.4, 1.0}, 2),
                  std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(CorrelationMatrix({2.0, 0.0, 0.0, 1.0}, 2),
                  std::invalid_argument);  // diagonal not one
  CHECK_THROWS_AS(CorrelationMatrix({1.0, 0.5, 0.5}, 2),
                  std::invalid_argument);  // wrong size
}

TEST_CASE("predictive correlation") {
  CHECK(predictive_correlation(0.0, 1.0) == doctest::Approx(0.5));
  CHECK(predictive_correlation(0.5, 0.5) ==
        doctest::Approx(1.25 / 1.5).epsilon(1e-14));
  CHECK(predictive_correlation(1.0, 3.7) == doctest::Approx(1.0));
  CHECK_THROWS_AS(predictive_correlation(-0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(predictive_correlation(1.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(predictive_correlation(0.5, 0.0), std::domain_error);

  // Increasing in rho, decreasing in eta.
  for (double eta : {0.25, 1.0, 4.0}) {
    double prev = -1.0;
    for (double rho = 0.0; rho <= 1.0; rho += 0.1) {
      const double v = predictive_correlation(rho, eta);
      CHECK(v > prev);
      prev = v;
    }
  }
  for (double rho : {0.0, 0.3, 0.9}) {
    double prev = 2.0;
    for (double eta : {0.1, 0.5, 1.0, 5.0, 50.0}) {
      const double v = predictive_correlation(rho, eta);
      if (rho < 1.0) CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("uncorrelated composition identity") {
  // Feeding rho_p = 1/(1+eta) into the equicorrelated multiple-correlation
  // formula reproduces n / ((1+eta)(n+eta)).
  for (double eta : {0.25, 0.5, 1.0, 2.0}) {
    for (int n : {1, 2, 5, 17, 80}) {
      const double rho_p = predictive_correlation(0.0, eta);
      const double composed =
          n * rho_p * rho_p / (1.0 + (n - 1) * rho_p);
      const double direct = n / ((1.0 + eta) * (n + eta));
      CHECK(std::abs(composed - direct) < 1e-12);
    }
  }
}

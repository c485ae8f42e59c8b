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

#include <cmath>
#include <random>
#include <stdexcept>

#include "design.hpp"
#include "linmodel.hpp"

using namespace sampinfo::design;
namespace lm = sampinfo::linmodel;

namespace {

// One-dimensional golden-section maximizer for the two-cell oracles.
double golden_max(const std::function<double(double)>& f, double a, double b) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("parameter-optimal sample allocation") {
  const std::vector<double> equal = {1.0, 1.0, 1.0};
  const auto sym = optimal_sample_allocation_parameter(9.0, 0.7, equal);
  CHECK(sym.feasible);
  for (double w : sym.weights) CHECK(w == doctest::Approx(3.0).epsilon(1e-14));

  const std::vector<double> v = {1.0, 0.5};
  const auto r = optimal_sample_allocation_parameter(10.0, 1.0, v);
  CHECK(r.feasible);
  CHECK(r.weights[0] == doctest::Approx(5.5).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(4.5).epsilon(1e-14));
  CHECK(r.weights[0] + r.weights[1] == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(r.continuous);

  // One-dimensional search over the first cell confirms the optimum.
  const auto objective = [&](double n1) {
    const std::vector<double> w = {n1, 10.0 - n1};
    return lm::detail::parameter_info_raw(w, v, 1.0);
  };
  const double n1_star = golden_max(objective, 1e-9, 10.0 - 1e-9);
  CHECK(std::abs(n1_star - 5.5) < 1e-6);
  CHECK(r.objective_value >= objective(n1_star) - 1e-12);
}

TEST_CASE("parameter-optimal allocation reports infeasibility as data") {
  const std::vector<double> v = {1.0, 0.01};
  const auto r = optimal_sample_allocation_parameter(1.0, 10.0, v);
  CHECK_FALSE(r.feasible);
  CHECK(r.binding_minimum == doctest::Approx(990.0).epsilon(1e-12));
  CHECK(std::isnan(r.objective_value));
}

TEST_CASE("predictive-optimal sample allocation, closed form") {
  // Proportional covariates with equal variances collapse to the equal split.
  const std::vector<double> v = {1.0, 1.0};
  const double d = 1.0 / std::sqrt(2.0);
  const std::vector<double> zdiag = {d, d};
  const auto eq = optimal_sample_allocation_predictive(10.0, 1.0, v, zdiag);
  CHECK(eq.feasible);
  CHECK_FALSE(eq.used_fallback);
  CHECK(eq.weights[0] == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(eq.weights[1] == doctest::Approx(5.0).epsilon(1e-12));

  const std::vector<double> z = {0.9, 0.4359};
  const auto r = optimal_sample_allocation_predictive(10.0, 1.0, v, z);
  CHECK(r.feasible);
  CHECK(r.weights[0] + r.weights[1] == doctest::Approx(10.0).epsilon(1e-12));
  // Against a one-dimensional search.
  const auto objective = [&](double n1) {
    const std::vector<double> w = {n1, 10.0 - n1};
    return lm::detail::predictive_info_raw(w, v, 1.0, z);
  };
  const double n1_star = golden_max(objective, 1e-9, 10.0 - 1e-9);
  CHECK(std::abs(r.weights[0] - n1_star) < 1e-3);
  CHECK(r.objective_value >= objective(n1_star) - 1e-9);
}

TEST_CASE("predictive allocation falls back on zero covariates") {
  const std::vector<double> v = {1.0, 1.0};
  const std::vector<double> z = {1.0, 0.0};
  const auto r = optimal_sample_allocation_predictive(10.0, 1.0, v, z);
  CHECK(r.used_fallback);
  CHECK(r.feasible);
  CHECK(r.weights[0] == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(r.weights[1] == 0.0);
  // Dominates a grid over the simplex.
  for (int i = 0; i <= 500; ++i) {
    const std::vector<double> w = {10.0 * i / 500.0, 10.0 - 10.0 * i / 500.0};
    CHECK(r.objective_value >=
          lm::detail::predictive_info_raw(w, v, 1.0, z) - 1e-12);
  }
  const std::vector<double> zzero = {0.0, 0.0};
  CHECK_THROWS_AS(optimal_sample_allocation_predictive(10.0, 1.0, v, zzero),
                  std::invalid_argument);
}

TEST_CASE("predictive allocation outside the interior condition") {
  // A nearly axis-aligned direction pushes the stationary point off the
  // simplex: the result is flagged infeasible for the interior reading but
  // still carries the constrained boundary maximizer.
  const std::vector<double> v = {1.0, 1.0};
  const std::vector<double> z = {0.05, std::sqrt(1.0 - 0.05 * 0.05)};
  const auto r = optimal_sample_allocation_predictive(10.0, 1.0, v, z);
  CHECK_FALSE(r.feasible);
  CHECK(r.used_fallback);
  CHECK(r.weights[0] == 0.0);
  CHECK(r.weights[1] == doctest::Approx(10.0).epsilon(1e-12));
  for (int i = 0; i <= 400; ++i) {
    const std::vector<double> w = {10.0 * i / 400.0, 10.0 - 10.0 * i / 400.0};
    CHECK(r.objective_value >=
          lm::detail::predictive_info_raw(w, v, 1.0, z) - 1e-12);
  }
}

TEST_CASE("prior-variance allocation") {
  const std::vector<double> equal = {1.0, 1.0};
  const auto sym = optimal_prior_variance_allocation(100.0, 1.0, equal);
  CHECK(sym.weights[0] == doctest::Approx(50.0).epsilon(1e-14));
  CHECK(sym.weights[1] == doctest::Approx(50.0).epsilon(1e-14));

  const std::vector<double> lam = {1.6, 0.4};
  const auto r = optimal_prior_variance_allocation(100.0, 1.0, lam);
  CHECK(r.feasible);
  CHECK(r.weights[0] == doctest::Approx(50.9375).epsilon(1e-14));
  CHECK(r.weights[1] == doctest::Approx(49.0625).epsilon(1e-14));

  // Condition-index identity: (l1 v1 + eta)/(l2 v2 + eta) = kappa^2 = 4.
  const auto res = condition_index_residuals(lam, r.weights, 1.0);
  REQUIRE(res.size() == 1);
  CHECK(std::abs(res[0]) < 1e-12);

  // One-dimensional search confirms the optimum.
  const auto objective = [&](double v1) {
    const std::vector<double> w = {v1, 100.0 - v1};
    return lm::detail::parameter_info_raw(lam, w, 1.0);
  };
  const double v1_star = golden_max(objective, 1e-9, 100.0 - 1e-9);
  CHECK(std::abs(v1_star - 50.9375) < 1e-5);

  const std::vector<double> unsorted = {0.4, 1.6};
  CHECK_THROWS_AS(optimal_prior_variance_allocation(100.0, 1.0, unsorted),
                  std::invalid_argument);
}

TEST_CASE("prior-variance allocation orders weights with the spectrum") {
  std::mt19937 gen(5150);
  std::uniform_real_distribution<double> unif(0.05, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> lam = {unif(gen), unif(gen), unif(gen), unif(gen)};
    std::sort(lam.begin(), lam.end(), std::greater<>());
    const auto r = optimal_prior_variance_allocation(50.0, unif(gen), lam);
    if (!r.feasible) continue;
    for (std::size_t j = 1; j < r.weights.size(); ++j) {
      CHECK(r.weights[j] <= r.weights[j - 1] + 1e-12);
    }
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    CHECK(std::abs(sum - 50.0) < 1e-9);
  }
}

TEST_CASE("prior-variance infeasibility reporting") {
  const std::vector<double> lam = {1000.0, 0.0011};
  const auto r = optimal_prior_variance_allocation(0.1, 1.0, lam);
  CHECK_FALSE(r.feasible);
  CHECK(r.binding_minimum > 0.0);
  CHECK(std::isnan(r.objective_value));
}

TEST_CASE("integer rounding enumerates budget-conserving neighbors") {
  const std::vector<double> v = {1.0, 0.5};
  const auto r = optimal_sample_allocation_parameter(10.0, 1.0, v);
  const auto obj = [&](std::span<const double> w) {
    return lm::detail::parameter_info_raw(w, v, 1.0);
  };
  const auto rounded = round_allocation(r.weights, 10.0, obj);
  double sum = 0.0;
  for (double w : rounded.weights) {
    CHECK(w == std::floor(w));
    sum += w;
  }
  CHECK(sum == doctest::Approx(10.0));
  // The best integerization of (5.5, 4.5) is whichever of (5,5)/(6,4) wins.
  const std::vector<double> a = {5.0, 5.0};
  const std::vector<double> b = {6.0, 4.0};
  const double best = std::max(obj(a), obj(b));
  CHECK(rounded.objective_value == doctest::Approx(best).epsilon(1e-14));
}

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
#include <stdexcept>
#include <vector>

#include "linmodel.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "specfn.hpp"
#include "tte.hpp"

using namespace sampinfo::oracle;

TEST_CASE("basic quadrature") {
  QuadratureSettings s;
  double err = 0.0;
  CHECK(std::abs(integrate([](double x) { return x * x; }, 0.0, 1.0, s, &err) -
                 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(integrate_positive_axis(
                     [](double x) { return std::exp(-x); }, s, &err) -
                 1.0) < 1e-10);
  // Algebraic tail.
  CHECK(std::abs(integrate_positive_axis(
                     [](double x) { return 1.0 / ((1.0 + x) * (1.0 + x)); },
                     s, &err) -
                 1.0) < 1e-10);
  CHECK(std::abs(integrate_positive_axis(
                     [](double x) { return x * std::exp(-x); }, s, &err) -
                 1.0) < 1e-10);
  // Integrable endpoint singularity.
  CHECK(std::abs(integrate([](double x) { return std::log(x); }, 0.0, 1.0, s,
                           &err) +
                 1.0) < 1e-10);
}

TEST_CASE("settings validation") {
  QuadratureSettings q;
  q.relative_tolerance = 0.0;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  q = QuadratureSettings{};
  q.max_subdivisions = 4;
  CHECK_THROWS_AS(q.validate(), std::invalid_argument);
  MonteCarloSettings m;
  m.replications = 10;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m = MonteCarloSettings{};
  m.batches = 2;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("defining-integral quadrature matches the closed forms") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (int n : {1, 2, 3, 5}) {
      const auto q = mi_quadrature_tte(alpha, n);
      const double closed =
          sampinfo::tte::parameter_info({alpha, 1.0}, n);
      CHECK(std::abs(q.estimate - closed) < std::max(1e-6, q.error_bound));
    }
  }
  // First worked value: one observation under a unit-shape prior.
  const auto q = mi_quadrature_tte(1.0, 1);
  CHECK(q.estimate == doctest::Approx(0.4228).epsilon(1e-4));
  CHECK(std::abs(q.estimate - sampinfo::specfn::kl_gamma_step(1.0)) < 1e-6);
}

TEST_CASE("uniform-order-statistic quadrature basics") {
  CHECK(std::abs(mi_quadrature_consecutive_uniform_order_stats(2, 1) -
                 (1.0 - std::log(2.0))) < 1e-7);
}

TEST_CASE("deterministic streams") {
  MonteCarloSettings mc;
  mc.seed = 11;
  mc.replications = 20000;
  const auto a = mi_montecarlo_tte(sampinfo::tte::Transform::exponential, 0.0,
                                   1.0, 1.0, 3, mc);
  const auto b = mi_montecarlo_tte(sampinfo::tte::Transform::exponential, 0.0,
                                   1.0, 1.0, 3, mc);
  CHECK(a.estimate == b.estimate);
  CHECK(a.standard_error == b.standard_error);
  mc.seed = 12;
  const auto c = mi_montecarlo_tte(sampinfo::tte::Transform::exponential, 0.0,
                                   1.0, 1.0, 3, mc);
  CHECK(a.estimate != c.estimate);
}

TEST_CASE("transform invariance of the lifetime estimates") {
  MonteCarloSettings mc;
  mc.seed = 2024;
  mc.replications = 100000;
  const auto exp_est = mi_montecarlo_tte(
      sampinfo::tte::Transform::exponential, 0.0, 1.0, 1.0, 3, mc);
  const auto wei_est = mi_montecarlo_tte(sampinfo::tte::Transform::weibull,
                                         2.0, 1.0, 1.0, 3, mc);
  const auto par_est = mi_montecarlo_tte(sampinfo::tte::Transform::pareto1,
                                         2.0, 1.0, 1.0, 3, mc);
  const double closed = sampinfo::tte::parameter_info({1.0, 1.0}, 3);
  for (const auto& est : {exp_est, wei_est, par_est}) {
    CHECK(std::abs(est.estimate - closed) < 3.0 * est.standard_error);
  }
  CHECK(std::abs(exp_est.estimate - wei_est.estimate) <
        3.0 * std::hypot(exp_est.standard_error, wei_est.standard_error));
}

TEST_CASE("standard errors shrink like the square root of the work") {
  MonteCarloSettings small;
  small.seed = 5;
  small.replications = 20000;
  small.batches = 100;
  MonteCarloSettings large = small;
  large.replications = 80000;
  const auto a = mi_montecarlo_tte(sampinfo::tte::Transform::exponential, 0.0,
                                   1.0, 1.0, 2, small);
  const auto b = mi_montecarlo_tte(sampinfo::tte::Transform::exponential, 0.0,
                                   1.0, 1.0, 2, large);
  const double ratio = a.standard_error / b.standard_error;
  CHECK(ratio > 2.0 * 0.8);
  CHECK(ratio < 2.0 * 1.25);
}

TEST_CASE("linear-model Monte Carlo oracle matches the closed forms") {
  sampinfo::linmodel::LinearModelSpec spec;
  spec.eigenvalues = {5.0, 5.0};
  spec.prior_variances = {1.0, 1.0};
  spec.eta = 1.0;
  const std::vector<double> z = {0.5, 0.5};
  MonteCarloSettings mc;
  mc.seed = 8;
  mc.replications = 60000;
  const auto p = mi_montecarlo_linmodel(spec, z, MiTarget::parameter, mc);
  CHECK(std::abs(p.estimate - sampinfo::linmodel::parameter_info(spec)) <
        3.0 * p.standard_error);
  const auto q = mi_montecarlo_linmodel(spec, z, MiTarget::predictive, mc);
  CHECK(std::abs(q.estimate - sampinfo::linmodel::predictive_info(spec, z)) <
        3.0 * q.standard_error);
  // Non-integer eigenvalues cannot be read as cell counts.
  spec.eigenvalues = {5.5, 4.5};
  CHECK_THROWS_AS(mi_montecarlo_linmodel(spec, z, MiTarget::parameter, mc),
                  std::invalid_argument);
}

TEST_CASE("order-statistic parameter-information quadrature") {
  // Information in a single middle order statistic sits strictly between
  // the one-step increment and the full-sample measure.
  const auto mi = mi_quadrature_theta_order_stat(1.0, 1.0, 5, 3);
  CHECK(mi.estimate > sampinfo::specfn::kl_gamma_step(3.0));
  CHECK(mi.estimate < sampinfo::tte::parameter_info({1.0, 1.0}, 5));
  CHECK(mi.estimate > 0.3);
  CHECK(mi.estimate < 1.1);
}

TEST_CASE("gamma sampler moments") {
  // Seeded sanity check of the variate generator used by every
  // Monte Carlo oracle.
  sampinfo::oracle::Rng rng(31, 0);
  for (double shape : {0.4, 1.0, 3.7}) {
    double sum = 0.0;
    double sumsq = 0.0;
    const int reps = 200000;
    for (int i = 0; i < reps; ++i) {
      const double g = rng.gamma(shape);
      sum += g;
      sumsq += g * g;
    }
    const double mean = sum / reps;
    const double var = sumsq / reps - mean * mean;
    CHECK(std::abs(mean - shape) < 0.02 * std::max(1.0, shape));
    CHECK(std::abs(var - shape) < 0.05 * std::max(1.0, shape));
  }
}

TEST_CASE("oracle input validation") {
  CHECK_THROWS_AS(mi_quadrature_tte(0.0, 3), std::domain_error);
  CHECK_THROWS_AS(mi_quadrature_tte(1.0, 0), std::domain_error);
  MonteCarloSettings mc;
  CHECK_THROWS_AS(mi_montecarlo_orderstats_next(1.0, 1.0, 5, 5, mc),
                  std::domain_error);
}

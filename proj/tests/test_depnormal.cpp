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
#include <stdexcept>

#include "depnormal.hpp"
#include "gaussmi.hpp"
#include "oracle.hpp"

using namespace sampinfo::depnormal;

namespace {

// Marginal correlation matrix route for the predictive information,
// independent of the Levinson path.
double predictive_info_matrix(const DepNormalSpec& spec) {
  const int n = spec.n;
  Eigen::MatrixXd c(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) {
        c(i, j) = 1.0;
        continue;
      }
      double cond = 0.0;
      if (spec.family == Family::IC) cond = spec.rho;
      if (spec.family == Family::SC) cond = std::pow(spec.rho, std::abs(i - j));
      c(i, j) = (1.0 + spec.eta * cond) / (1.0 + spec.eta);
    }
  }
  std::vector<double> flat(c.data(), c.data() + (n + 1) * (n + 1));
  const sampinfo::gaussmi::CorrelationMatrix cm(
      flat, static_cast<std::size_t>(n + 1));
  return sampinfo::gaussmi::mi_via_inverse_element(
      cm, static_cast<std::size_t>(n));
}

}  // namespace

TEST_CASE("effective sample size closed forms") {
  CHECK(t_n({Family::UC, 0.0, 7, 1.0}) == doctest::Approx(7.0));
  CHECK(t_n({Family::IC, 0.5, 10, 1.0}) ==
        doctest::Approx(10.0 / 5.5).epsilon(1e-14));
  CHECK(t_n({Family::SC, 0.5, 8, 1.0}) ==
        doctest::Approx(5.0 / 1.5).epsilon(1e-14));
  CHECK(t_n({Family::IC, 0.0, 9, 1.0}) == doctest::Approx(9.0));
  CHECK(t_n({Family::SC, 0.0, 9, 1.0}) == doctest::Approx(9.0));
}

TEST_CASE("parameter information examples") {
  CHECK(parameter_info({Family::UC, 0.0, 3, 0.5}) ==
        doctest::Approx(0.5 * std::log(7.0)).epsilon(1e-14));
  CHECK(parameter_info({Family::SC, 0.5, 8, 0.5}) ==
        doctest::Approx(1.0184409636).epsilon(1e-9));
  CHECK(parameter_info({Family::SC, 0.75, 16, 0.5}) ==
        doctest::Approx(0.9929578).epsilon(1e-6));
  // Intraclass information never exceeds its long-run bound.
  const double bound = 0.5 * std::log1p(1.0 / (0.5 * 0.5));
  for (int n = 1; n <= 2000; n *= 2) {
    CHECK(parameter_info({Family::IC, 0.5, n, 0.5}) < bound);
  }
}

TEST_CASE("conditional dependence examples") {
  CHECK(conditional_dependence_info({Family::UC, 0.0, 9, 1.0}) == 0.0);
  CHECK(conditional_dependence_info({Family::IC, 0.5, 26, 0.5}) ==
        doctest::Approx(-0.5 * std::log1p(-6.5 / 13.5)).epsilon(1e-14));
  CHECK(conditional_dependence_info({Family::IC, 0.5, 26, 0.5}) ==
        doctest::Approx(0.3284).epsilon(1e-3));
  // Serial dependence is one-step and free of n.
  const double expected = -0.5 * std::log1p(-0.25);
  for (int n : {2, 5, 40}) {
    CHECK(conditional_dependence_info({Family::SC, 0.5, n, 0.8}) ==
          doctest::Approx(expected).epsilon(1e-14));
  }
  CHECK(conditional_dependence_info({Family::SC, 0.5, 5, 0.8}) ==
        doctest::Approx(0.1438).epsilon(1e-3));
}

TEST_CASE("predictive information: closed forms and examples") {
  // Uncorrelated closed form.
  for (int n : {1, 3, 10}) {
    for (double eta : {0.25, 1.0}) {
      const double r2 = n / ((1.0 + eta) * (n + eta));
      CHECK(predictive_info({Family::UC, 0.0, n, eta}) ==
            doctest::Approx(-0.5 * std::log1p(-r2)).epsilon(1e-13));
    }
  }
  // Intraclass example.
  CHECK(predictive_info({Family::IC, 0.5, 26, 0.5}) ==
        doctest::Approx(0.877).epsilon(1e-3));
  // At rho = 0 every family matches the uncorrelated value.
  for (int n : {1, 2, 7, 30}) {
    const double uc = predictive_info({Family::UC, 0.0, n, 0.5});
    CHECK(std::abs(predictive_info({Family::IC, 0.0, n, 0.5}) - uc) < 1e-12);
    CHECK(std::abs(predictive_info({Family::SC, 0.0, n, 0.5}) - uc) < 1e-12);
  }
}

TEST_CASE("predictive information agrees with the matrix route") {
  for (int n = 1; n <= 12; ++n) {
    for (double rho : {0.0, 0.1, 0.5, 0.9}) {
      for (double eta : {0.5, 1.5}) {
        for (Family fam : {Family::UC, Family::IC, Family::SC}) {
          const DepNormalSpec spec{fam, fam == Family::UC ? 0.0 : rho, n, eta};
          CHECK(std::abs(predictive_info(spec) - predictive_info_matrix(spec)) <
                1e-10);
        }
      }
    }
  }
}

TEST_CASE("one-step predictive value never exceeds the full one") {
  for (double rho : {0.0, 0.3, 0.8}) {
    for (int n : {1, 4, 16}) {
      const DepNormalSpec spec{Family::SC, rho, n, 0.5};
      CHECK(predictive_info_one_step(spec) <= predictive_info(spec) + 1e-12);
    }
  }
  // The one-step value is the tabulated immediate-future entry.
  const double rho_p = (1.0 + 0.5 * 0.6) / 1.5;
  CHECK(predictive_info_one_step({Family::SC, 0.6, 9, 0.5}) ==
        doctest::Approx(-0.5 * std::log1p(-rho_p * rho_p)).epsilon(1e-14));
}

TEST_CASE("joint information composition") {
  const auto uc = joint_info({Family::UC, 0.0, 5, 0.5});
  CHECK(uc.dependence == 0.0);
  CHECK(uc.joint == uc.parameter);

  const auto ic = joint_info({Family::IC, 0.5, 5, 0.5});
  CHECK(ic.parameter == doctest::Approx(0.73317).epsilon(1e-4));
  CHECK(ic.dependence == doctest::Approx(0.26943).epsilon(1e-4));
  CHECK(ic.joint == doctest::Approx(1.00260).epsilon(1e-4));
  CHECK(ic.joint == ic.parameter + ic.dependence);
  CHECK(ic.joint > ic.parameter);

  for (double rho : {0.2, 0.7}) {
    const auto sc = joint_info({Family::SC, rho, 11, 0.8});
    CHECK(sc.joint - sc.parameter ==
          doctest::Approx(-0.5 * std::log1p(-rho * rho)).epsilon(1e-13));
  }
}

TEST_CASE("joint minimizer against direct minimization") {
  // Exact rational root for the serial family at n = 10, eta = 0.5.
  const auto m = joint_minimizer_rho(Family::SC, 10, 0.5);
  CHECK(m.interior);
  CHECK(m.rho0 == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(m.min_joint == doctest::Approx(1.2305951).epsilon(1e-6));

  const auto m2 = joint_minimizer_rho(Family::SC, 9, 0.25);
  CHECK(m2.rho0 == doctest::Approx(0.6088003).epsilon(1e-6));
  CHECK(m2.min_joint == doctest::Approx(1.5055118).epsilon(1e-5));

  // Grid sweep confirms no point beats the reported minimum.
  for (Family fam : {Family::IC, Family::SC}) {
    for (int n : {3, 9, 20}) {
      for (double eta : {0.25, 0.75}) {
        const auto mm = joint_minimizer_rho(fam, n, eta);
        for (int k = 0; k <= 999; ++k) {
          const double rho = k / 1000.0;
          CHECK(joint_info({fam, rho, n, eta}).joint >= mm.min_joint - 1e-9);
        }
      }
    }
  }
  CHECK_THROWS_AS(joint_minimizer_rho(Family::UC, 5, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(joint_minimizer_rho(Family::IC, 1, 1.0),
                  std::invalid_argument);
}

TEST_CASE("all measures increase with n and decrease with eta") {
  for (Family fam : {Family::UC, Family::IC, Family::SC}) {
    const double rho = fam == Family::UC ? 0.0 : 0.3;
    double prev_p = -1.0;
    double prev_q = -1.0;
    double prev_j = -1.0;
    for (int n = 1; n <= 200; ++n) {
      const auto t = joint_info({fam, rho, n, 0.5});
      CHECK(t.parameter >= prev_p - 1e-13);
      CHECK(t.predictive >= prev_q - 1e-13);
      CHECK(t.joint >= prev_j - 1e-13);
      prev_p = t.parameter;
      prev_q = t.predictive;
      prev_j = t.joint;
    }
    double prev_param = 1e9;
    double prev_pred = 1e9;
    for (double eta : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      const auto t = joint_info({fam, rho, 9, eta});
      CHECK(t.parameter < prev_param);
      CHECK(t.predictive < prev_pred);
      prev_param = t.parameter;
      prev_pred = t.predictive;
    }
  }
}

TEST_CASE("Monte Carlo oracle agreement") {
  sampinfo::oracle::MonteCarloSettings mc;
  mc.seed = 99;
  mc.replications = 50000;
  const DepNormalSpec ic{Family::IC, 0.5, 5, 0.5};
  const auto closed = joint_info(ic);
  using sampinfo::oracle::MiTarget;
  const auto p =
      sampinfo::oracle::mi_montecarlo_depnormal(ic, MiTarget::parameter, mc);
  CHECK(std::abs(p.estimate - closed.parameter) < 3.0 * p.standard_error);
  const auto q =
      sampinfo::oracle::mi_montecarlo_depnormal(ic, MiTarget::predictive, mc);
  CHECK(std::abs(q.estimate - closed.predictive) < 3.0 * q.standard_error);
  const auto c = sampinfo::oracle::mi_montecarlo_depnormal(
      ic, MiTarget::conditional_dependence, mc);
  CHECK(std::abs(c.estimate - closed.dependence) < 3.0 * c.standard_error);
  const auto j =
      sampinfo::oracle::mi_montecarlo_depnormal(ic, MiTarget::joint, mc);
  CHECK(std::abs(j.estimate - closed.joint) < 3.0 * j.standard_error);

  const DepNormalSpec uc{Family::UC, 0.0, 4, 1.0};
  const auto closed_uc = joint_info(uc);
  const auto pu =
      sampinfo::oracle::mi_montecarlo_depnormal(uc, MiTarget::parameter, mc);
  CHECK(std::abs(pu.estimate - closed_uc.parameter) <
        3.0 * pu.standard_error);
  const auto qu =
      sampinfo::oracle::mi_montecarlo_depnormal(uc, MiTarget::predictive, mc);
  CHECK(std::abs(qu.estimate - closed_uc.predictive) <
        3.0 * qu.standard_error);
}

TEST_CASE("sample-size searches") {
  auto res = sample_size_for_info(Family::UC, 0.0, 0.5, 1.0,
                                  Measure::parameter, SearchPolicy::nearest);
  CHECK(res.reachability == Reachability::reached);
  CHECK(res.n == 3);
  res = sample_size_for_info(Family::UC, 0.0, 0.5, 1.0, Measure::parameter,
                             SearchPolicy::reach);
  CHECK(res.n == 4);

  res = sample_size_for_info(Family::SC, 0.5, 0.5, 1.0, Measure::parameter,
                             SearchPolicy::nearest);
  CHECK(res.n == 8);
  res = sample_size_for_info(Family::SC, 0.75, 0.5, 1.0, Measure::parameter,
                             SearchPolicy::nearest);
  CHECK(res.n == 16);

  // Bounded measure: the supremum is reported instead of a search.
  res = sample_size_for_info(Family::IC, 0.5, 0.5, 1.0, Measure::parameter,
                             SearchPolicy::reach);
  CHECK(res.reachability == Reachability::unreachable);
  CHECK(res.supremum ==
        doctest::Approx(0.5 * std::log(5.0)).epsilon(1e-12));

  // Serial predictive information is bounded too.
  const double sup = measure_supremum(Family::SC, 0.5, 0.5,
                                      Measure::predictive);
  res = sample_size_for_info(Family::SC, 0.5, 0.5, sup + 0.1,
                             Measure::predictive, SearchPolicy::reach);
  CHECK(res.reachability == Reachability::unreachable);
  res = sample_size_for_info(Family::SC, 0.5, 0.5, sup * 0.8,
                             Measure::predictive, SearchPolicy::reach);
  CHECK(res.reachability == Reachability::reached);
  CHECK(predictive_info({Family::SC, 0.5, res.n, 0.5}) >= sup * 0.8);
  if (res.n > 1) {
    CHECK(predictive_info({Family::SC, 0.5, res.n - 1, 0.5}) < sup * 0.8);
  }

  // Minimized-joint searches (rho unknown).
  res = sample_size_for_info(Family::SC, std::nullopt, 0.25, 1.5,
                             Measure::joint, SearchPolicy::reach);
  CHECK(res.reachability == Reachability::reached);
  CHECK(res.n == 9);

  CHECK_THROWS_AS(sample_size_for_info(Family::UC, std::nullopt, 0.5, 1.0,
                                       Measure::joint, SearchPolicy::reach),
                  std::invalid_argument);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(t_n({Family::IC, 1.0, 5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(t_n({Family::IC, -0.1, 5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(t_n({Family::IC, 0.5, 0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(t_n({Family::IC, 0.5, 5, 0.0}), std::invalid_argument);
}

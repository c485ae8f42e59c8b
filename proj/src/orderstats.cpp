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

#include "orderstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "specfn.hpp"

namespace sampinfo::orderstats {

using specfn::digamma;
using specfn::log_beta;

void OrderStatPlan::validate() const {
  if (n < 2) throw std::domain_error("order statistics require n >= 2");
  if (r < 1 || r >= n) throw std::domain_error("require 1 <= r <= n-1");
}

double markov_dependence_info(const OrderStatPlan& plan) {
  plan.validate();
  const double n = plan.n;
  const double r = plan.r;
  const double value = log_beta(r + 1.0, n - r + 1.0) + std::log(n + 1.0) -
                       1.0 - r * (digamma(r) - digamma(n)) -
                       (n - r) * (digamma(n - r) - digamma(n));
  return value < 0.0 ? 0.0 : value;
}

std::vector<int> markov_max_r(int n) {
  if (n < 2) throw std::domain_error("order statistics require n >= 2");
  double best = -1.0;
  for (int r = 1; r < n; ++r) {
    best = std::max(best, markov_dependence_info({n, r}));
  }
  std::vector<int> out;
  for (int r = 1; r < n; ++r) {
    if (markov_dependence_info({n, r}) >= best - 1e-12) out.push_back(r);
  }
  return out;
}

linmodel::InfoTriple joint_info_next_order_stat(
    const OrderStatPlan& plan, const tte::GammaPriorSpec& prior) {
  plan.validate();
  prior.validate();
  linmodel::InfoTriple t;
  // The first r failure times carry the same parameter information as r
  // full observations (total time on test is sufficient).
  t.parameter = tte::parameter_info(prior, plan.r);
  t.dependence = markov_dependence_info(plan);
  t.joint = t.parameter + t.dependence;
  t.predictive = std::numeric_limits<double>::quiet_NaN();
  return t;
}

int argmax_joint_r(int n, const tte::GammaPriorSpec& prior) {
  if (n < 2) throw std::domain_error("order statistics require n >= 2");
  int best_r = 1;
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 1; r < n; ++r) {
    const auto t = joint_info_next_order_stat({n, r}, prior);
    if (t.joint > best) {
      best = t.joint;
      best_r = r;
    }
  }
  return best_r;
}

BridgeMeasures bridge_measures(const OrderStatPlan& plan,
                               const tte::GammaPriorSpec& prior) {
  plan.validate();  // r < n, so the correction is finite
  prior.validate();
  BridgeMeasures b;
  b.correction = std::log(static_cast<double>(plan.n) /
                          static_cast<double>(plan.n - plan.r));
  b.bridge_param = tte::parameter_info(prior, plan.r) - b.correction;
  b.bridge_pred = std::numeric_limits<double>::quiet_NaN();
  b.pred_mi_estimate = std::numeric_limits<double>::quiet_NaN();
  b.pred_mi_standard_error = std::numeric_limits<double>::quiet_NaN();
  return b;
}

int direction(double lhs, double rhs, double tolerance) {
  const double d = lhs - rhs;
  if (std::abs(d) <= tolerance) return 0;
  return d > 0.0 ? 1 : -1;
}

OrderCheck next_order_stat_direction_check(
    const OrderStatPlan& plan, const tte::GammaPriorSpec& prior,
    const oracle::QuadratureSettings& quad,
    const oracle::MonteCarloSettings& mc) {
  plan.validate();
  prior.validate();
  OrderCheck check;

  const auto mi_next = oracle::mi_montecarlo_orderstats_next(
      prior.alpha, prior.beta, plan.n, plan.r, mc);
  check.predictive_side.lhs = mi_next.estimate;
  check.predictive_side.rhs = markov_dependence_info(plan);
  check.predictive_side.tolerance = 3.0 * mi_next.standard_error;
  check.predictive_side.direction =
      direction(check.predictive_side.lhs, check.predictive_side.rhs,
                check.predictive_side.tolerance);

  const auto mi_single = oracle::mi_quadrature_theta_order_stat(
      prior.alpha, prior.beta, plan.n, plan.r + 1, quad);
  check.parameter_side.lhs = mi_single.estimate;
  check.parameter_side.rhs = specfn::kl_gamma_step(prior.alpha + plan.r);
  check.parameter_side.tolerance = std::max(mi_single.error_bound, 1e-6);
  check.parameter_side.direction =
      direction(check.parameter_side.lhs, check.parameter_side.rhs,
                check.parameter_side.tolerance);

  check.indeterminate = check.predictive_side.direction == 0 ||
                        check.parameter_side.direction == 0;
  check.consistent =
      check.indeterminate ||
      check.predictive_side.direction == check.parameter_side.direction;
  return check;
}

}  // namespace sampinfo::orderstats

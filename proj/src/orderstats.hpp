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

#include <vector>

#include "linmodel.hpp"  // InfoTriple
#include "oracle.hpp"    // quadrature / Monte Carlo settings
#include "tte.hpp"       // GammaPriorSpec

// Information measures for order statistics. Conditional on the parameter,
// the order statistics of an i.i.d. sample form a Markov chain whose
// dependence information is free of both the parent distribution and the
// prior; the exponential-parent, gamma-prior case supplies the parameter
// term through total-time-on-test sufficiency.

namespace sampinfo::orderstats {

struct OrderStatPlan {
  int n = 2;  // sample size
  int r = 1;  // number of observed order statistics, 1 <= r <= n-1
  void validate() const;
};

// Mutual information between consecutive order statistics of a sample of
// size n:
//   M_n(r) = ln B(r+1, n-r+1) + ln(n+1) - 1
//            - r [psi(r) - psi(n)] - (n-r) [psi(n-r) - psi(n)].
// Nonnegative, symmetric in r <-> n-r, and maximal at the median.
double markov_dependence_info(const OrderStatPlan& plan);

// All r in 1..n-1 attaining the maximum of M_n(r) (two values when n is
// even and the split ties).
std::vector<int> markov_max_r(int n);

// Information carried by the first r order statistics about the parameter
// and the next order statistic jointly (exponential parent, gamma prior):
//   parameter  = TTE parameter information at r observations,
//   dependence = M_n(r),
//   joint      = parameter + dependence.
// No closed form exists for the predictive component; it is left NaN and
// available through the Monte Carlo oracle.
linmodel::InfoTriple joint_info_next_order_stat(const OrderStatPlan& plan,
                                                const tte::GammaPriorSpec& prior);

// argmax over r in 1..n-1 of the joint information above.
int argmax_joint_r(int n, const tte::GammaPriorSpec& prior);

// Entropy-change measures relative to the first order statistic. For a
// scale-parameter parent they differ from the mutual informations by the
// finite-sample correction ln(n / (n-r)); bridge values may be negative.
struct BridgeMeasures {
  double correction = 0.0;    // ln(n / (n - r))
  double bridge_param = 0.0;  // parameter MI minus correction
  // Filled by the caller from the Monte Carlo oracle; NaN when absent.
  double bridge_pred = 0.0;
  double pred_mi_estimate = 0.0;
  double pred_mi_standard_error = 0.0;
};
// Closed-form part only (correction and bridge_param); the predictive part
// is oracle-valued and attached by callers that ran it.
BridgeMeasures bridge_measures(const OrderStatPlan& plan,
                               const tte::GammaPriorSpec& prior);

// Sign of lhs - rhs: +1, -1, or 0 when within the tolerance.
int direction(double lhs, double rhs, double tolerance);

// Two equivalent order comparisons: the information the first r order
// statistics carry about the next one, against the Markov dependence
// (predictive side); and the information a single next order statistic
// carries about the parameter, against the incremental parameter
// information kl_gamma_step(alpha + r) (parameter side). The predictive
// side is Monte-Carlo-valued and the single-outcome term is
// quadrature-valued; the two directions must agree whenever neither
// comparison is within its tolerance. Exponential parent, gamma prior.
struct DirectionCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  int direction = 0;  // +1, -1, or 0 (indeterminate)
};
struct OrderCheck {
  DirectionCheck predictive_side;
  DirectionCheck parameter_side;
  bool indeterminate = false;  // either side within tolerance
  bool consistent = true;      // directions agree (or indeterminate)
};
OrderCheck next_order_stat_direction_check(
    const OrderStatPlan& plan, const tte::GammaPriorSpec& prior,
    const oracle::QuadratureSettings& quad,
    const oracle::MonteCarloSettings& mc);

}  // namespace sampinfo::orderstats

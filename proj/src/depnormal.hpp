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

#include <optional>
#include <vector>

#include "linmodel.hpp"  // InfoTriple

// Information measures for the normal location model with conditionally
// dependent observations: y | theta ~ N(theta * 1, sigma_1^2 R) with a
// normal prior on theta and eta = sigma_1^2 / sigma_0^2. Three correlation
// families are supported: uncorrelated (UC), intraclass (IC, constant
// off-diagonal rho) and serial (SC, rho^|i-j|).

namespace sampinfo::depnormal {

enum class Family { UC, IC, SC };

struct DepNormalSpec {
  Family family = Family::UC;
  double rho = 0.0;  // in [0, 1); ignored for UC
  int n = 1;
  double eta = 1.0;
  void validate() const;
};

// T_n(R) = 1' R^-1 1, the effective sample size.
//   UC: n    IC: n / (1 + (n-1) rho)    SC: (n - (n-2) rho) / (1 + rho)
double t_n(const DepNormalSpec& spec);

// (1/2) ln(1 + T_n / eta).
double parameter_info(const DepNormalSpec& spec);

// -(1/2) ln(1 - r2) with r2 the squared conditional multiple correlation
// between the future outcome and the sample:
//   UC: 0    IC: n rho^2 / (1 + (n-1) rho)    SC: rho^2 (one step ahead)
double conditional_dependence_info(const DepNormalSpec& spec);

// Information the sample carries about the next outcome, from the squared
// multiple correlation of the marginal (n+1)-dimensional normal law.
// UC and IC admit closed forms through the equicorrelated structure; for
// SC the one-step-ahead prediction error of the stationary marginal
// sequence is computed by the Levinson recursion. At rho = 0 all three
// families agree.
double predictive_info(const DepNormalSpec& spec);

// The immediate-future simplification: -(1/2) ln(1 - rho_p^2) where rho_p
// is the marginal correlation between the latest observation and the next
// outcome. A lower bound on predictive_info that ignores all but one
// observation; exposed for exploratory use.
double predictive_info_one_step(const DepNormalSpec& spec);

// joint = parameter + conditional dependence; strictly exceeds the
// parameter information when rho > 0.
linmodel::InfoTriple joint_info(const DepNormalSpec& spec);

// Marginal autocorrelation sequence t_0..t_n of the SC family and the
// one-step prediction error variances for orders 1..n (Levinson).
std::vector<double> sc_prediction_error_variances(int n, double rho,
                                                  double eta);

// The correlation at which the joint information is smallest, for IC/SC.
// The stationarity condition is quadratic in rho; `interior` is false when
// no root lies in (0, 1), in which case rho0/min_joint report the best
// boundary value.
struct JointMinimizer {
  double rho0 = 0.0;
  double min_joint = 0.0;
  bool interior = true;
};
JointMinimizer joint_minimizer_rho(Family family, int n, double eta);

enum class Measure { parameter, predictive, joint };
enum class SearchPolicy { reach, nearest };
enum class Reachability { reached, unreachable, cap_exceeded };

struct SampleSizeResult {
  Reachability reachability = Reachability::reached;
  int n = 0;            // smallest/nearest sample size when reached
  double achieved = 0;  // measure value at n (or at the cap)
  double supremum = 0;  // +inf when the measure is unbounded in n
};

// Smallest n whose measure meets `target` (policy `reach`), or the n whose
// measure is closest to it (policy `nearest`). Bounded measures report
// their supremum and `unreachable` instead of searching forever. Passing
// rho = nullopt minimizes the joint information over rho at each n
// (valid for measure `joint`, families IC/SC).
SampleSizeResult sample_size_for_info(Family family, std::optional<double> rho,
                                      double eta, double target, Measure m,
                                      SearchPolicy policy = SearchPolicy::reach,
                                      int n_cap = 8192);

// Supremum over n of the requested measure (+inf when unbounded).
double measure_supremum(Family family, std::optional<double> rho, double eta,
                        Measure m);

}  // namespace sampinfo::depnormal

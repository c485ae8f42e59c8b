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

#include "oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"
#include "specfn.hpp"

namespace sampinfo::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double guard(double v) { return std::isfinite(v) ? v : 0.0; }

// Exact ln(m!) for the factorial ratios used by order-statistic densities;
// integer arithmetic keeps the quadrature oracles free of lgamma.
double log_factorial(int m) {
  if (m < 0) throw std::invalid_argument("negative factorial");
  double acc = 0.0;
  for (int i = 2; i <= m; ++i) acc += std::log(static_cast<double>(i));
  return acc;
}

int depth_from_settings(const QuadratureSettings& s) {
  int depth = 6;
  while ((1 << depth) < s.max_subdivisions && depth < 15) ++depth;
  return depth;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(relative_tolerance > 0.0)) {
    throw std::invalid_argument("quadrature tolerance must be positive");
  }
  if (max_subdivisions < 16) {
    throw std::invalid_argument("max_subdivisions must be at least 16");
  }
  if (!(tail_mass > 0.0) || tail_mass >= 0.5) {
    throw std::invalid_argument("tail mass must lie in (0, 0.5)");
  }
}

void MonteCarloSettings::validate() const {
  if (replications < 1000) {
    throw std::invalid_argument("need at least 1000 replications");
  }
  if (batches < 10 || batches > replications) {
    throw std::invalid_argument("need at least 10 batches");
  }
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings, double* error_bound) {
  settings.validate();
  if (!(b > a)) {
    if (error_bound) *error_bound = 0.0;
    return 0.0;
  }
  boost::math::quadrature::tanh_sinh<double> quad(depth_from_settings(settings));
  double err = 0.0;
  double l1 = 0.0;
  std::size_t levels = 0;
  const double value = quad.integrate([&](double x) { return guard(f(x)); }, a,
                                      b, settings.relative_tolerance, &err,
                                      &l1, &levels);
  if (error_bound) {
    *error_bound = err * std::max(l1, std::abs(value)) +
                   settings.relative_tolerance * std::abs(value);
  }
  return value;
}

double integrate_positive_axis(const std::function<double(double)>& f,
                               const QuadratureSettings& settings,
                               double* error_bound) {
  double e1 = 0.0;
  double e2 = 0.0;
  const double head = integrate(f, 0.0, 1.0, settings, &e1);
  const double tail = integrate(
      [&](double u) {
        const double x = 1.0 / u;
        return guard(f(x) * x * x);
      },
      0.0, 1.0, settings, &e2);
  if (error_bound) *error_bound = e1 + e2;
  return head + tail;
}

// ---------------------------------------------------------------------------
// TTE quadrature oracle
// ---------------------------------------------------------------------------

QuadratureResult mi_quadrature_tte(double alpha, int n,
                                   const QuadratureSettings& s) {
  s.validate();
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (n > 170) throw std::domain_error("n too large for the factorial table");

  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.1;

  // All densities are normalized numerically; the only closed-form
  // constant is the integer factorial (n-1)!.
  const double z_prior = integrate_positive_axis(
      [&](double t) { return std::pow(t, alpha - 1.0) * std::exp(-t); }, inner,
      nullptr);
  const double log_gamma_n = log_factorial(n - 1);

  // Posterior normalizer and the posterior mean of (n ln t - s t).
  const auto posterior_parts = [&](double sstat, double* z_post) {
    const double a_post = alpha + static_cast<double>(n);
    const double rate = 1.0 + sstat;
    *z_post = integrate_positive_axis(
        [&](double t) { return std::pow(t, a_post - 1.0) * std::exp(-rate * t); },
        inner, nullptr);
    const double moment = integrate_positive_axis(
        [&](double t) {
          const double w = std::pow(t, a_post - 1.0) * std::exp(-rate * t);
          return w * (n * std::log(t) - sstat * t);
        },
        inner, nullptr);
    return moment;
  };

  const auto integrand = [&](double sstat) {
    if (!(sstat > 0.0)) return 0.0;
    double z_post = 0.0;
    const double moment = posterior_parts(sstat, &z_post);
    if (!(z_post > 0.0)) return 0.0;
    const double kl = moment / z_post + std::log(z_prior) - std::log(z_post);
    const double log_marginal = (n - 1.0) * std::log(sstat) +
                                std::log(z_post) - log_gamma_n -
                                std::log(z_prior);
    return std::exp(log_marginal) * kl;
  };

  double err = 0.0;
  const double value = integrate_positive_axis(integrand, s, &err);
  QuadratureResult r;
  r.estimate = value;
  r.error_bound = err + 10.0 * inner.relative_tolerance * std::abs(value);
  return r;
}

double kl_gamma_quadrature(double v, const QuadratureSettings& s) {
  s.validate();
  if (!(v > 0.0)) throw std::domain_error("v must be positive");
  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.1;
  const double z_hi = integrate_positive_axis(
      [&](double t) { return std::pow(t, v) * std::exp(-t); }, inner, nullptr);
  const double z_lo = integrate_positive_axis(
      [&](double t) { return std::pow(t, v - 1.0) * std::exp(-t); }, inner,
      nullptr);
  // E_hi[ln t] with the shape-(v+1) weight, renormalized.
  const double mean_log = integrate_positive_axis(
      [&](double t) {
        return std::pow(t, v) * std::exp(-t) * std::log(t);
      },
      inner, nullptr);
  return mean_log / z_hi + std::log(z_lo) - std::log(z_hi);
}

double gamma_entropy_quadrature(double alpha, const QuadratureSettings& s) {
  s.validate();
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.1;
  const double z = integrate_positive_axis(
      [&](double t) { return std::pow(t, alpha - 1.0) * std::exp(-t); }, inner,
      nullptr);
  const double plogp = integrate_positive_axis(
      [&](double t) {
        const double logw = (alpha - 1.0) * std::log(t) - t;
        return std::exp(logw) * logw;
      },
      inner, nullptr);
  // H = -E[ln f] = ln z - E[ln w]/z with w the unnormalized density.
  return std::log(z) - plogp / z;
}

double pareto_entropy_quadrature(double alpha, const QuadratureSettings& s) {
  s.validate();
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.1;
  // Substitute u = 1/(1+y): the unnormalized density becomes u^(alpha+1),
  // with Jacobian u^-2.
  const double z = integrate(
      [&](double u) { return std::pow(u, alpha - 1.0); }, 0.0, 1.0, inner,
      nullptr);
  const double plogp = integrate(
      [&](double u) {
        const double logw = (alpha + 1.0) * std::log(u);
        return std::pow(u, alpha - 1.0) * logw;
      },
      0.0, 1.0, inner, nullptr);
  return std::log(z) - plogp / z;
}

// ---------------------------------------------------------------------------
// Order-statistic quadrature oracles
// ---------------------------------------------------------------------------

double mi_quadrature_consecutive_uniform_order_stats(
    int n, int r, const QuadratureSettings& s) {
  s.validate();
  if (n < 2 || r < 1 || r >= n) throw std::domain_error("require 1 <= r < n");
  if (n > kUniformOrderStatQuadMaxN) {
    throw std::domain_error(
        "uniform order-statistic quadrature is limited to n <= 12; use the "
        "Monte Carlo oracle for larger samples");
  }
  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.1;

  const double log_cjoint =
      log_factorial(n) - log_factorial(r - 1) - log_factorial(n - r - 1);
  const double log_cr =
      log_factorial(n) - log_factorial(r - 1) - log_factorial(n - r);
  const double log_cr1 =
      log_factorial(n) - log_factorial(r) - log_factorial(n - r - 1);

  const auto outer = [&](double w1) -> double {
    if (!(w1 > 0.0) || !(w1 < 1.0)) return 0.0;
    const double log_w1 = std::log(w1);
    const double log_1mw1 = std::log1p(-w1);
    // Inner integral over w2 in (w1, 1), substituted as w2 = 1 - t so the
    // vanishing factor 1 - w2 = t sits at the clustered endpoint.
    const double upper = 1.0 - w1;
    const auto inner_f = [&](double t) -> double {
      if (!(t > 0.0) || t >= upper) return 0.0;
      const double w2 = 1.0 - t;
      const double log_t = std::log(t);
      const double log_joint = log_cjoint + (r - 1.0) * log_w1 +
                               (n - r - 1.0) * log_t;
      const double log_fr =
          log_cr + (r - 1.0) * log_w1 + (n - r) * log_1mw1;
      const double log_fr1 =
          log_cr1 + r * std::log(w2) + (n - r - 1.0) * log_t;
      return std::exp(log_joint) * (log_joint - log_fr - log_fr1);
    };
    double e = 0.0;
    return integrate(inner_f, 0.0, upper, inner, &e);
  };

  double err = 0.0;
  const double value = integrate(outer, 0.0, 1.0, s, &err);
  return value;
}

namespace {

// Density of the k-th order statistic of n unit-scale exponentials with
// hazard theta.
double exp_orderstat_log_pdf(double y, double theta, int n, int k,
                             double log_c) {
  if (!(y > 0.0)) return -kInf;
  const double ty = theta * y;
  const double log_sf = -ty;                      // ln(1 - F)
  const double log_cdf = std::log(-std::expm1(-ty));  // ln F
  return log_c + (k - 1.0) * log_cdf + (n - k) * log_sf + std::log(theta) -
         ty;
}

}  // namespace

QuadratureResult mi_quadrature_theta_order_stat(double alpha, double beta,
                                                int n, int k,
                                                const QuadratureSettings& s) {
  s.validate();
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw std::domain_error("prior parameters must be positive");
  }
  if (n < 1 || k < 1 || k > n) throw std::domain_error("require 1 <= k <= n");

  QuadratureSettings inner = s;
  inner.relative_tolerance = s.relative_tolerance * 0.05;
  const double log_c =
      log_factorial(n) - log_factorial(k - 1) - log_factorial(n - k);

  // The theta integrals carry the prior as weight; cut them to a central
  // interval holding all but `tail_mass` of the prior.
  const boost::math::gamma_distribution<double> prior(alpha, 1.0 / beta);
  const double theta_lo = boost::math::quantile(prior, s.tail_mass);
  const double theta_hi =
      boost::math::quantile(boost::math::complement(prior, s.tail_mass));

  const double z_prior = integrate(
      [&](double t) { return std::pow(t, alpha - 1.0) * std::exp(-beta * t); },
      theta_lo, theta_hi, inner, nullptr);

  const auto marginal_pdf = [&](double y) {
    return integrate(
               [&](double t) {
                 const double logw = (alpha - 1.0) * std::log(t) - beta * t +
                                     exp_orderstat_log_pdf(y, t, n, k, log_c);
                 return std::exp(logw);
               },
               theta_lo, theta_hi, inner, nullptr) /
           z_prior;
  };

  double e_hy = 0.0;
  const double h_marginal = integrate_positive_axis(
      [&](double y) {
        const double f = marginal_pdf(y);
        if (!(f > 0.0)) return 0.0;
        return -f * std::log(f);
      },
      s, &e_hy);

  const auto conditional_entropy = [&](double theta) {
    return integrate_positive_axis(
        [&](double y) {
          const double lf = exp_orderstat_log_pdf(y, theta, n, k, log_c);
          const double f = std::exp(lf);
          if (!(f > 0.0)) return 0.0;
          return -f * lf;
        },
        inner, nullptr);
  };

  double e_cond = 0.0;
  const double h_conditional =
      integrate(
          [&](double t) {
            const double w =
                std::pow(t, alpha - 1.0) * std::exp(-beta * t);
            return w <= 0.0 ? 0.0 : w * conditional_entropy(t);
          },
          theta_lo, theta_hi, s, &e_cond) /
      z_prior;

  QuadratureResult r;
  r.estimate = h_marginal - h_conditional;
  r.error_bound = e_hy + e_cond +
                  20.0 * inner.relative_tolerance *
                      (std::abs(h_marginal) + std::abs(h_conditional));
  return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo engine
// ---------------------------------------------------------------------------

namespace {

// Deterministic batch-partitioned Monte Carlo: batch b draws from stream
// (tag, b), so results are independent of any parallel scheduling.
template <typename PerRep>
MonteCarloResult run_mc(const MonteCarloSettings& s, std::uint64_t stream_tag,
                        PerRep per_rep) {
  s.validate();
  const long long per_batch = s.replications / s.batches;
  std::vector<double> batch_means(static_cast<std::size_t>(s.batches));
  double grand = 0.0;
  for (int b = 0; b < s.batches; ++b) {
    Rng rng(s.seed, stream_tag * 0x10000ULL + static_cast<std::uint64_t>(b));
    double acc = 0.0;
    for (long long i = 0; i < per_batch; ++i) acc += per_rep(rng);
    batch_means[static_cast<std::size_t>(b)] = acc / per_batch;
    grand += batch_means[static_cast<std::size_t>(b)];
  }
  grand /= s.batches;
  double var = 0.0;
  for (double m : batch_means) var += (m - grand) * (m - grand);
  var /= (s.batches - 1);
  MonteCarloResult r;
  r.estimate = grand;
  r.standard_error = std::sqrt(var / s.batches);
  return r;
}

// KL divergence between gamma laws (shape, rate).
double kl_gamma(double a1, double b1, double a2, double b2) {
  return (a1 - a2) * specfn::digamma(a1) - specfn::log_gamma(a1) +
         specfn::log_gamma(a2) + a2 * (std::log(b1) - std::log(b2)) +
         a1 * (b2 - b1) / b1;
}

// KL divergence between normal laws.
double kl_normal(double m1, double v1, double m2, double v2) {
  return 0.5 * ((v1 + (m1 - m2) * (m1 - m2)) / v2 - 1.0 - std::log(v1 / v2));
}

// Generates one lifetime through the transform and maps it back to its
// sufficient-statistic contribution. The heavy-tailed transforms route
// through log space, where the round trip is overflow-safe.
double transformed_suff_increment(tte::Transform t, double param, double e) {
  switch (t) {
    case tte::Transform::exponential:
      return e;
    case tte::Transform::weibull:
      return std::pow(std::pow(e, 1.0 / param), param);
    case tte::Transform::pareto1: {
      const double log_y = std::log(param) + e;
      return log_y - std::log(param);
    }
    case tte::Transform::extreme_value:
      return std::exp(std::log(e));
  }
  throw std::invalid_argument("unknown transform");
}

// Conditional correlation matrix of the n observations plus the next
// outcome, for the given family.
Eigen::MatrixXd conditional_correlation_full(const depnormal::DepNormalSpec& spec) {
  const int m = spec.n + 1;
  Eigen::MatrixXd c = Eigen::MatrixXd::Identity(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) {
      double v = 0.0;
      switch (spec.family) {
        case depnormal::Family::UC: v = 0.0; break;
        case depnormal::Family::IC: v = spec.rho; break;
        case depnormal::Family::SC: v = std::pow(spec.rho, i - j); break;
      }
      c(i, j) = v;
      c(j, i) = v;
    }
  }
  return c;
}

constexpr std::uint64_t kTagTte = 11;
constexpr std::uint64_t kTagDepParam = 21;
constexpr std::uint64_t kTagDepPred = 22;
constexpr std::uint64_t kTagDepCond = 23;
constexpr std::uint64_t kTagOrderCons = 31;
constexpr std::uint64_t kTagOrderNext = 32;
constexpr std::uint64_t kTagObserved = 41;
constexpr std::uint64_t kTagLinParam = 51;
constexpr std::uint64_t kTagLinPred = 52;

}  // namespace

MonteCarloResult mi_montecarlo_tte(tte::Transform transform,
                                   double transform_param, double alpha,
                                   double beta, int n,
                                   const MonteCarloSettings& s) {
  tte::GammaPriorSpec prior{alpha, beta};
  prior.validate();
  if (n < 1) throw std::domain_error("n must be >= 1");
  // Distinct transforms draw from distinct streams so invariance checks
  // compare genuinely independent estimates.
  const std::uint64_t tag =
      kTagTte * 131 + static_cast<std::uint64_t>(transform);
  return run_mc(s, tag, [&](Rng& rng) {
    const double theta = rng.gamma(alpha) / beta;
    double suff = 0.0;
    for (int i = 0; i < n; ++i) {
      const double e = rng.exponential() / theta;
      suff += transformed_suff_increment(transform, transform_param, e);
    }
    return kl_gamma(alpha + n, beta + suff, alpha, beta);
  });
}

MonteCarloResult mi_montecarlo_depnormal(const depnormal::DepNormalSpec& spec,
                                         MiTarget target,
                                         const MonteCarloSettings& s) {
  spec.validate();
  const int n = spec.n;
  const double eta = spec.eta;

  if (target == MiTarget::joint) {
    const MonteCarloResult p =
        mi_montecarlo_depnormal(spec, MiTarget::parameter, s);
    const MonteCarloResult c =
        mi_montecarlo_depnormal(spec, MiTarget::conditional_dependence, s);
    MonteCarloResult r;
    r.estimate = p.estimate + c.estimate;
    r.standard_error = std::hypot(p.standard_error, c.standard_error);
    return r;
  }

  const Eigen::MatrixXd c_full = conditional_correlation_full(spec);
  const Eigen::MatrixXd r_cond = c_full.topLeftCorner(n, n);
  const Eigen::LLT<Eigen::MatrixXd> llt(r_cond);
  if (llt.info() != Eigen::Success) {
    throw not_positive_definite("conditional correlation is not PD");
  }
  const Eigen::MatrixXd chol = llt.matrixL();

  // Scale convention: prior variance 1, noise variance eta.
  switch (target) {
    case MiTarget::parameter: {
      const Eigen::VectorXd w = llt.solve(Eigen::VectorXd::Ones(n));
      const double t_n = w.sum();
      const double post_var = 1.0 / (1.0 + t_n / eta);
      return run_mc(s, kTagDepParam, [&, w, post_var](Rng& rng) {
        const double theta = rng.normal();
        Eigen::VectorXd xi(n);
        for (int i = 0; i < n; ++i) xi(i) = rng.normal();
        const Eigen::VectorXd y =
            Eigen::VectorXd::Constant(n, theta) + std::sqrt(eta) * (chol * xi);
        const double post_mean = post_var * (w.dot(y)) / eta;
        return kl_normal(post_mean, post_var, 0.0, 1.0);
      });
    }
    case MiTarget::predictive: {
      // Marginal joint covariance of (y, y_nu).
      const Eigen::MatrixXd sigma =
          Eigen::MatrixXd::Ones(n + 1, n + 1) + eta * c_full;
      const Eigen::VectorXd s_ynu = sigma.topRightCorner(n, 1);
      const Eigen::LLT<Eigen::MatrixXd> syy(sigma.topLeftCorner(n, n));
      const Eigen::VectorXd b = syy.solve(s_ynu);
      const double cond_var = sigma(n, n) - s_ynu.dot(b);
      const double marg_var = sigma(n, n);
      return run_mc(s, kTagDepPred, [&, b, cond_var, marg_var](Rng& rng) {
        const double theta = rng.normal();
        Eigen::VectorXd xi(n);
        for (int i = 0; i < n; ++i) xi(i) = rng.normal();
        const Eigen::VectorXd y =
            Eigen::VectorXd::Constant(n, theta) + std::sqrt(eta) * (chol * xi);
        return kl_normal(b.dot(y), cond_var, 0.0, marg_var);
      });
    }
    case MiTarget::conditional_dependence: {
      const Eigen::VectorXd c_ynu = c_full.topRightCorner(n, 1);
      const Eigen::VectorXd a = llt.solve(c_ynu);
      const double cond_ratio = 1.0 - c_ynu.dot(a);  // var ratio given theta
      return run_mc(s, kTagDepCond, [&, a, cond_ratio](Rng& rng) {
        Eigen::VectorXd xi(n);
        for (int i = 0; i < n; ++i) xi(i) = rng.normal();
        const Eigen::VectorXd eps = std::sqrt(eta) * (chol * xi);
        return kl_normal(a.dot(eps), eta * cond_ratio, 0.0, eta);
      });
    }
    default: break;
  }
  throw std::invalid_argument("unknown Monte Carlo target");
}

MonteCarloResult mi_montecarlo_linmodel(const linmodel::LinearModelSpec& spec,
                                        std::span<const double> z,
                                        MiTarget target,
                                        const MonteCarloSettings& s) {
  spec.validate();
  const std::size_t p = spec.dim();
  if (z.size() != p) throw std::invalid_argument("covariate point dimension");
  std::vector<int> counts(p);
  int total = 0;
  for (std::size_t j = 0; j < p; ++j) {
    counts[j] = static_cast<int>(std::llround(spec.eigenvalues[j]));
    if (counts[j] < 1 ||
        std::abs(counts[j] - spec.eigenvalues[j]) > 1e-9) {
      throw std::invalid_argument(
          "the linear-model oracle needs integer cell counts as eigenvalues");
    }
    total += counts[j];
  }
  const double eta = spec.eta;

  switch (target) {
    case MiTarget::parameter: {
      // Per-cell means with independent normal priors: the posterior is
      // diagonal, so the KL divergence splits across components.
      return run_mc(s, kTagLinParam, [&](Rng& rng) {
        double kl = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
          const double v0 = spec.prior_variances[j];
          const double theta = std::sqrt(v0) * rng.normal();
          double cell_sum = 0.0;
          for (int k = 0; k < counts[j]; ++k) {
            cell_sum += theta + std::sqrt(eta) * rng.normal();
          }
          const double post_var = 1.0 / (1.0 / v0 + counts[j] / eta);
          const double post_mean = post_var * cell_sum / eta;
          kl += kl_normal(post_mean, post_var, 0.0, v0);
        }
        return kl;
      });
    }
    case MiTarget::predictive: {
      // Prior predictive of z'theta + noise vs its conditional given the
      // cell sums (jointly Gaussian, so both laws are exact per draw).
      double marg_var = eta;
      for (std::size_t j = 0; j < p; ++j) {
        marg_var += z[j] * z[j] * spec.prior_variances[j];
      }
      return run_mc(s, kTagLinPred, [&](Rng& rng) {
        double cond_mean = 0.0;
        double cond_var = eta;
        for (std::size_t j = 0; j < p; ++j) {
          const double v0 = spec.prior_variances[j];
          const double theta = std::sqrt(v0) * rng.normal();
          double cell_sum = 0.0;
          for (int k = 0; k < counts[j]; ++k) {
            cell_sum += theta + std::sqrt(eta) * rng.normal();
          }
          const double post_var = 1.0 / (1.0 / v0 + counts[j] / eta);
          cond_mean += z[j] * post_var * cell_sum / eta;
          cond_var += z[j] * z[j] * post_var;
        }
        return kl_normal(cond_mean, cond_var, 0.0, marg_var);
      });
    }
    default:
      throw std::invalid_argument(
          "the linear-model oracle supports the parameter and predictive "
          "targets");
  }
}

namespace {

double parent_log_pdf(OrderStatParent p, double q, double theta, double y) {
  if (!(y > 0.0)) return -kInf;
  switch (p) {
    case OrderStatParent::exponential:
      return std::log(theta) - theta * y;
    case OrderStatParent::weibull: {
      const double yq = std::pow(y, q);
      return std::log(theta * q) + (q - 1.0) * std::log(y) - theta * yq;
    }
  }
  throw std::invalid_argument("unknown parent");
}

double parent_log_sf(OrderStatParent p, double q, double theta, double y) {
  switch (p) {
    case OrderStatParent::exponential: return -theta * y;
    case OrderStatParent::weibull: return -theta * std::pow(y, q);
  }
  throw std::invalid_argument("unknown parent");
}

double parent_log_cdf(OrderStatParent p, double q, double theta, double y) {
  return std::log(-std::expm1(parent_log_sf(p, q, theta, y)));
}

double parent_sample(OrderStatParent p, double q, double theta, Rng& rng) {
  const double e = rng.exponential() / theta;
  switch (p) {
    case OrderStatParent::exponential: return e;
    case OrderStatParent::weibull: return std::pow(e, 1.0 / q);
  }
  throw std::invalid_argument("unknown parent");
}

}  // namespace

MonteCarloResult mi_montecarlo_orderstats_consecutive(
    OrderStatParent parent, double weibull_exponent, double theta, int n,
    int r, const MonteCarloSettings& s) {
  if (n < 2 || r < 1 || r >= n) throw std::domain_error("require 1 <= r < n");
  if (!(theta > 0.0)) throw std::domain_error("theta must be positive");
  if (parent == OrderStatParent::weibull && !(weibull_exponent > 0.0)) {
    throw std::domain_error("Weibull exponent must be positive");
  }
  const double q = weibull_exponent;
  const int k = r + 1;
  const double log_ck =
      log_factorial(n) - log_factorial(k - 1) - log_factorial(n - k);
  const std::uint64_t tag =
      kTagOrderCons * 131 + static_cast<std::uint64_t>(parent);
  return run_mc(s, tag, [&, q, k, log_ck](Rng& rng) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = parent_sample(parent, q, theta, rng);
    std::sort(x.begin(), x.end());
    const double yr = x[static_cast<std::size_t>(r - 1)];
    const double yk = x[static_cast<std::size_t>(r)];
    // Markov conditional of the next order statistic given the r-th.
    const double log_cond = std::log(static_cast<double>(n - r)) +
                            parent_log_pdf(parent, q, theta, yk) +
                            (n - r - 1.0) * parent_log_sf(parent, q, theta, yk) -
                            (n - r) * parent_log_sf(parent, q, theta, yr);
    const double log_marg = log_ck +
                            (k - 1.0) * parent_log_cdf(parent, q, theta, yk) +
                            (n - k) * parent_log_sf(parent, q, theta, yk) +
                            parent_log_pdf(parent, q, theta, yk);
    return log_cond - log_marg;
  });
}

namespace {

// Marginal density of the k-th order statistic of n exponential lifetimes
// under a gamma prior: an alternating binomial sum with a quadrature
// fallback when cancellation bites (small y, large k).
class NextOrderStatMarginal {
 public:
  NextOrderStatMarginal(double alpha, double beta, int n, int k)
      : alpha_(alpha), beta_(beta), n_(n), k_(k) {
    log_c_ = log_factorial(n) - log_factorial(k - 1) - log_factorial(n - k);
    binom_.resize(static_cast<std::size_t>(k));
    double b = 1.0;
    for (int j = 0; j < k; ++j) {
      binom_[static_cast<std::size_t>(j)] = b;
      b = b * (k - 1 - j) / (j + 1.0);
    }
    quad_.relative_tolerance = 1e-9;
  }

  double log_pdf(double y) const {
    if (!(y > 0.0)) return -kInf;
    double sum = 0.0;
    double max_term = 0.0;
    for (int j = 0; j < k_; ++j) {
      const double c = static_cast<double>(n_ - k_ + 1 + j);
      const double term = binom_[static_cast<std::size_t>(j)] * alpha_ *
                          std::pow(beta_ / (beta_ + c * y), alpha_) /
                          (beta_ + c * y);
      max_term = std::max(max_term, std::abs(term));
      sum += (j % 2 == 0) ? term : -term;
    }
    if (sum > 1e-9 * max_term) {
      return log_c_ + std::log(sum);
    }
    // Cancellation: integrate the mixture over the prior instead.
    const double z_prior = prior_normalizer();
    const double f = integrate_positive_axis(
                         [&](double t) {
                           const double logw =
                               (alpha_ - 1.0) * std::log(t) - beta_ * t +
                               exp_orderstat_log_pdf(y, t, n_, k_, log_c_);
                           return std::exp(logw);
                         },
                         quad_, nullptr) /
                     z_prior;
    return f > 0.0 ? std::log(f) : -kInf;
  }

 private:
  double prior_normalizer() const {
    if (z_prior_ == 0.0) {
      z_prior_ = integrate_positive_axis(
          [&](double t) {
            return std::pow(t, alpha_ - 1.0) * std::exp(-beta_ * t);
          },
          quad_, nullptr);
    }
    return z_prior_;
  }

  double alpha_;
  double beta_;
  int n_;
  int k_;
  double log_c_ = 0.0;
  std::vector<double> binom_;
  QuadratureSettings quad_;
  mutable double z_prior_ = 0.0;
};

}  // namespace

MonteCarloResult mi_montecarlo_orderstats_next(double alpha, double beta,
                                               int n, int r,
                                               const MonteCarloSettings& s) {
  tte::GammaPriorSpec prior{alpha, beta};
  prior.validate();
  if (n < 2 || r < 1 || r >= n) throw std::domain_error("require 1 <= r < n");
  const NextOrderStatMarginal marginal(alpha, beta, n, r + 1);
  return run_mc(s, kTagOrderNext, [&](Rng& rng) {
    const double theta = rng.gamma(alpha) / beta;
    std::vector<double> x(static_cast<std::size_t>(n));
    for (auto& v : x) v = rng.exponential() / theta;
    std::sort(x.begin(), x.end());
    const double yr = x[static_cast<std::size_t>(r - 1)];
    const double yk = x[static_cast<std::size_t>(r)];
    double total_time = (n - r) * yr;
    for (int i = 0; i < r; ++i) total_time += x[static_cast<std::size_t>(i)];
    // Predictive law of the next failure given the first r: shifted Pareto.
    const double a_post = alpha + r;
    const double scale = (beta + total_time) / (n - r);
    const double log_pred = std::log(a_post) + a_post * std::log(scale) -
                            (a_post + 1.0) * std::log(scale + yk - yr);
    return log_pred - marginal.log_pdf(yk);
  });
}

MonteCarloResult mc_mean_observed_param_info(const tte::GammaPriorSpec& prior,
                                             int n,
                                             const MonteCarloSettings& s) {
  prior.validate();
  if (n < 1) throw std::domain_error("n must be >= 1");
  return run_mc(s, kTagObserved, [&](Rng& rng) {
    const double theta = rng.gamma(prior.alpha) / prior.beta;
    const double suff = rng.gamma(static_cast<double>(n)) / theta;
    return tte::observed_param_info(prior, {n, suff});
  });
}

MonteCarloResult mc_mean_observed_predictive_info(
    const tte::GammaPriorSpec& prior, int n, const MonteCarloSettings& s) {
  prior.validate();
  if (n < 1) throw std::domain_error("n must be >= 1");
  return run_mc(s, kTagObserved + 1, [&](Rng& rng) {
    const double theta = rng.gamma(prior.alpha) / prior.beta;
    const double suff = rng.gamma(static_cast<double>(n)) / theta;
    return tte::observed_predictive_info(prior, {n, suff});
  });
}

}  // namespace sampinfo::oracle

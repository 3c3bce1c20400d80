/*
 * Copyright 2026 The fedtext Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fedtext/accountant.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fedtext {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without leaving log space.
double log_add(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

// log(exp(a) - exp(b)), requires a >= b.
double log_sub(double a, double b) {
  if (b == -kInf) return a;
  if (a == b) return -kInf;
  if (a < b) {
    throw std::runtime_error("accountant: alternating series went negative");
  }
  return a + std::log1p(-std::exp(b - a));
}

// log(erfc(x)), stable for large positive x where erfc underflows.
double log_erfc(double x) {
  if (x < 10.0) return std::log(std::erfc(x));
  // Asymptotic series erfc(x) ~ e^{-x^2}/(x sqrt(pi)) (1 - 1/(2x^2) + ...)
  const double x2 = x * x;
  const double series =
      1.0 - 0.5 / x2 + 0.75 / (x2 * x2) - 1.875 / (x2 * x2 * x2);
  return -x2 - std::log(x) - 0.5 * std::log(3.141592653589793238462643) +
         std::log(series);
}

// log C(alpha, k) for integer arguments via lgamma.
double log_binom(long alpha, long k) {
  return std::lgamma(static_cast<double>(alpha) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(alpha - k) + 1.0);
}

// Integer-order bound: log A(alpha) with
// A = sum_{k=0..alpha} C(alpha,k) (1-q)^{alpha-k} q^k exp(k(k-1)/(2 z^2)).
double log_a_int(double q, double z, long alpha) {
  double log_a = -kInf;
  for (long k = 0; k <= alpha; ++k) {
    const double term = log_binom(alpha, k) + k * std::log(q) +
                        (alpha - k) * std::log1p(-q) +
                        (static_cast<double>(k) * k - k) / (2.0 * z * z);
    log_a = log_add(log_a, term);
  }
  return log_a;
}

// Fractional-order bound: the binomial series generalized to real alpha,
// with each term split at z0 (the crossing point of the two mixture
// densities) into a pair of Gaussian tail integrals expressed via erfc.
double log_a_frac(double q, double z, double alpha) {
  double log_a0 = -kInf, log_a1 = -kInf;
  const double z0 = z * z * std::log(1.0 / q - 1.0) + 0.5;

  // C(alpha, k) tracked incrementally as sign + log magnitude; terms with
  // k > alpha alternate in sign.
  double log_coef = 0.0;
  double coef_sign = 1.0;
  for (long k = 0;; ++k) {
    if (k > 0) {
      const double factor = (alpha - k + 1.0) / k;
      if (factor == 0.0) break;  // alpha is an integer; series terminates
      log_coef += std::log(std::abs(factor));
      coef_sign *= (factor < 0.0 ? -1.0 : 1.0);
    }
    const double j = alpha - k;
    const double log_t0 = log_coef + k * std::log(q) + j * std::log1p(-q);
    const double log_t1 = log_coef + j * std::log(q) + k * std::log1p(-q);
    const double log_e0 =
        std::log(0.5) + log_erfc((k - z0) / (std::sqrt(2.0) * z));
    const double log_e1 =
        std::log(0.5) + log_erfc((z0 - j) / (std::sqrt(2.0) * z));
    const double log_s0 =
        log_t0 + (static_cast<double>(k) * k - k) / (2.0 * z * z) + log_e0;
    const double log_s1 = log_t1 + (j * j - j) / (2.0 * z * z) + log_e1;

    if (coef_sign > 0.0) {
      log_a0 = log_add(log_a0, log_s0);
      log_a1 = log_add(log_a1, log_s1);
    } else {
      log_a0 = log_sub(log_a0, log_s0);
      log_a1 = log_sub(log_a1, log_s1);
    }
    // Terms rise toward a peak near z0 before decaying; only stop once past
    // both the order and the peak.
    if (std::max(log_s0, log_s1) < -30.0 && k > static_cast<long>(alpha) &&
        static_cast<double>(k) > z0) {
      break;
    }
  }
  return log_add(log_a0, log_a1);
}

double rdp_single_step(double q, double z, double alpha) {
  if (q == 0.0) return 0.0;
  if (z == 0.0) return kInf;
  if (q == 1.0) return alpha / (2.0 * z * z);
  const bool integral = alpha == std::floor(alpha);
  const double log_a = integral
                           ? log_a_int(q, z, static_cast<long>(alpha))
                           : log_a_frac(q, z, alpha);
  return std::max(log_a / (alpha - 1.0), 0.0);
}

}  // namespace

const std::vector<double>& default_order_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g = {1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 3.0, 3.5, 4.0, 4.5};
    for (int a = 5; a <= 64; ++a) g.push_back(a);
    g.push_back(128.0);
    g.push_back(256.0);
    g.push_back(512.0);
    return g;
  }();
  return grid;
}

std::vector<double> rdp_subsampled_gaussian(double q, double z, long steps,
                                            std::span<const double> orders) {
  if (q < 0.0 || q > 1.0) {
    throw std::invalid_argument("sampling probability must be in [0, 1]");
  }
  if (z < 0.0) {
    throw std::invalid_argument("noise multiplier must be >= 0");
  }
  if (steps < 1) {
    throw std::invalid_argument("steps must be >= 1");
  }
  std::vector<double> rdp;
  rdp.reserve(orders.size());
  for (double alpha : orders) {
    if (alpha <= 1.0) {
      throw std::invalid_argument("Rényi orders must be > 1");
    }
    rdp.push_back(static_cast<double>(steps) * rdp_single_step(q, z, alpha));
  }
  return rdp;
}

PrivacySpec rdp_to_epsilon(std::span<const double> rdp,
                           std::span<const double> orders, double delta,
                           RdpConversion conversion) {
  if (rdp.size() != orders.size()) {
    throw std::invalid_argument("rdp and orders differ in length");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  double best = kInf;
  double best_order = 0.0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const double a = orders[i];
    double eps;
    if (conversion == RdpConversion::classic) {
      eps = rdp[i] + std::log(1.0 / delta) / (a - 1.0);
    } else {
      if (a <= 1.01) continue;  // bound not usable as alpha -> 1
      eps = rdp[i] + std::log1p(-1.0 / a) -
            (std::log(delta) + std::log(a)) / (a - 1.0);
      eps = std::max(eps, 0.0);
    }
    if (eps < best) {
      best = eps;
      best_order = a;
    }
  }
  if (!std::isfinite(best)) {
    throw std::runtime_error(
        "no finite epsilon at any order (is the noise multiplier zero?)");
  }
  return {best, delta, best_order};
}

PrivacySpec report_epsilon(const AccountantInput& input, double delta,
                           RdpConversion conversion) {
  const std::vector<double>& orders =
      input.orders.empty() ? default_order_grid() : input.orders;
  const std::vector<double> rdp = rdp_subsampled_gaussian(
      input.sampling_probability, input.noise_multiplier, input.steps, orders);
  return rdp_to_epsilon(rdp, orders, delta, conversion);
}

double calibrate_noise(double target_epsilon, double delta, double q,
                       long steps, double z_max, RdpConversion conversion) {
  if (target_epsilon <= 0.0) {
    throw std::invalid_argument("target epsilon must be > 0");
  }
  auto eps_at = [&](double z) {
    return report_epsilon({q, z, steps, {}}, delta, conversion).epsilon;
  };

  const double eps_at_max = eps_at(z_max);
  if (eps_at_max > target_epsilon) {
    std::ostringstream msg;
    msg << "target epsilon " << target_epsilon << " unreachable: z_max "
        << z_max << " only achieves epsilon " << eps_at_max;
    throw std::runtime_error(msg.str());
  }

  double lo = 1e-6;  // search floor
  if (eps_at(lo) <= target_epsilon) return lo;
  double hi = z_max;
  // epsilon is monotone non-increasing in z, so plain bisection applies.
  while ((hi - lo) / hi > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (eps_at(mid) <= target_epsilon) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace fedtext

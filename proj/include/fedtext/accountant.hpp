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
#ifndef FEDTEXT_ACCOUNTANT_HPP_
#define FEDTEXT_ACCOUNTANT_HPP_

#include <span>
#include <vector>

namespace fedtext {

// Rényi-DP (moments) accountant for the Poisson-subsampled Gaussian
// mechanism: each round, every client independently joins with probability
// q; the joined clients' clipped updates are summed and Gaussian noise with
// standard deviation z*C is added. One round costs rdp(alpha) at each Rényi
// order alpha; T rounds compose additively; the (epsilon, delta) guarantee
// is the minimum over orders of the RDP-to-DP conversion.
//
// Accounting is at the client (user) level: the mechanism's unit is one
// client's whole update.

struct AccountantInput {
  double sampling_probability = 0;  // q = expected cohort / population
  double noise_multiplier = 0;      // z
  long steps = 1;                   // T, composed rounds
  std::vector<double> orders;       // empty -> default_order_grid()
};

struct PrivacySpec {
  double epsilon = 0;
  double delta = 0;
  double optimal_order = 0;  // order achieving the minimum
};

// Two RDP->(eps, delta) conversions are provided.
//   improved (default): eps(a) = rdp(a) + ln((a-1)/a) - (ln(delta)+ln(a))/(a-1),
//     clamped at 0; the bound implemented by current accounting libraries.
//   classic: eps(a) = rdp(a) + ln(1/delta)/(a-1).
// The improved bound is strictly tighter and is what reproduces published
// parameter tables; the classic one is kept for comparison.
enum class RdpConversion { improved, classic };

// {1.25, 1.5, 1.75, 2, 2.25, 2.5, 3, 3.5, 4, 4.5, 5..64, 128, 256, 512}
const std::vector<double>& default_order_grid();

// Per-order RDP of T composed rounds. Integer orders use the exact
// binomial-expansion bound
//   rdp(a) = log( sum_{k=0..a} C(a,k) (1-q)^(a-k) q^k e^{k(k-1)/(2 z^2)} ) / (a-1),
// evaluated with log-sum-exp; non-integer orders use the standard
// continuous (erfc-based) bound, which agrees with the integer formula at
// integer arguments. Edge cases: q=0 -> 0 at every order; q=1 -> the plain
// Gaussian value a/(2 z^2); z=0 with q>0 -> +infinity (reported, not an
// error).
std::vector<double> rdp_subsampled_gaussian(double q, double z, long steps,
                                            std::span<const double> orders);

// Minimum over orders of the conversion; throws if every candidate is
// non-finite (e.g. z=0).
PrivacySpec rdp_to_epsilon(std::span<const double> rdp,
                           std::span<const double> orders, double delta,
                           RdpConversion conversion = RdpConversion::improved);

// Smallest noise multiplier z (bisection, 1e-4 relative) whose accounted
// epsilon is <= target_epsilon. Throws if the target is unreachable at
// z_max, reporting the epsilon achieved there.
double calibrate_noise(double target_epsilon, double delta, double q,
                       long steps, double z_max = 100.0,
                       RdpConversion conversion = RdpConversion::improved);

// rdp_subsampled_gaussian + rdp_to_epsilon.
PrivacySpec report_epsilon(const AccountantInput& input, double delta,
                           RdpConversion conversion = RdpConversion::improved);

}  // namespace fedtext

#endif  // FEDTEXT_ACCOUNTANT_HPP_

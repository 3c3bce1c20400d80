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
#ifndef FEDTEXT_RNG_HPP_
#define FEDTEXT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fedtext::rng {

// splitmix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

// Substream derivation. Every consumer of randomness in the project seeds
// its engine with derive(parent_seed, tag[, index]), never with the parent
// seed itself, so streams for different purposes (test split, client
// construction, per-round sampling, DP noise, ...) are independent and a
// run is reproducible regardless of evaluation order.
constexpr std::uint64_t derive(std::uint64_t seed, std::string_view tag) {
  return mix64(seed ^ mix64(fnv1a64(tag)));
}

constexpr std::uint64_t derive(std::uint64_t seed, std::string_view tag,
                               std::uint64_t index) {
  return mix64(derive(seed, tag) ^ mix64(index + 0x517cc1b727220a95ULL));
}

// Deterministic random engine. mt19937_64 output is pinned by the C++
// standard, and the distributions below are implemented here rather than
// taken from <random> (whose distributions are implementation-defined),
// so identical seeds give identical draws on any platform.
class Engine {
 public:
  explicit Engine(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, bound) via rejection sampling. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t draw;
    do {
      draw = gen_();
    } while (draw >= limit);
    return draw % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller; the paired draw is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log(u1) finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Fisher-Yates shuffle driven by below(); deterministic given the seed.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fedtext::rng

#endif  // FEDTEXT_RNG_HPP_

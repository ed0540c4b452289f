/*
 * Copyright 2026 The jetcert Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef JETCERT_TESTS_GENERATORS_HPP
#define JETCERT_TESTS_GENERATORS_HPP

#include <cstdint>
#include <numeric>
#include <random>

#include "jetcert/poly.hpp"
#include "jetcert/rational.hpp"
#include "jetcert/threefold.hpp"

namespace jetcert::testing {

// Fixed-seed generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  // Rational with denominator in [1, max_den] and |value| <= bound.
  Rat rational(std::int64_t bound = 4, std::int64_t max_den = 60) {
    const std::int64_t den = integer(1, max_den);
    return Rat(integer(-bound * den, bound * den), den);
  }

  // Rational in [lo, hi].
  Rat rational_in(const Rat& lo, const Rat& hi, std::int64_t steps = 997) {
    return lo + (hi - lo) * Rat(integer(0, steps), steps);
  }

  Poly poly(int max_degree = 3) {
    std::vector<Rat> coeffs;
    const auto deg = integer(0, max_degree);
    for (std::int64_t i = 0; i <= deg; ++i) coeffs.push_back(rational(3, 12));
    return Poly(std::move(coeffs));
  }

  // Reduced p/q with 1/3 < p/q < 1/2 and q_min <= q <= q_max.
  Candidate candidate(std::int64_t q_min, std::int64_t q_max) {
    for (;;) {
      const std::int64_t q = integer(q_min, q_max);
      const std::int64_t p = integer(1, q);
      if (std::gcd(p, q) != 1) continue;
      if (3 * p <= q || 2 * p >= q) continue;
      return Candidate(p, q);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace jetcert::testing

#endif  // JETCERT_TESTS_GENERATORS_HPP

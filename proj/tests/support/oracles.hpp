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

// Reference computations that do not go through the library code paths
// they are compared against.

#ifndef JETCERT_TESTS_ORACLES_HPP
#define JETCERT_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "jetcert/piecewise.hpp"
#include "jetcert/poly.hpp"
#include "jetcert/rational.hpp"

namespace jetcert::testing {

// Horner-free evaluation straight from the coefficient list.
inline Rat eval_naive(const Poly& p, const Rat& t) {
  Rat sum(0);
  for (int i = 0; i <= p.degree(); ++i) sum += p.coefficient(i) * t.pow(static_cast<unsigned>(i));
  return sum;
}

// Simpson's rule, exact for degree <= 3.
inline Rat simpson(const Poly& p, const Rat& a, const Rat& b) {
  const Rat mid = (a + b) / Rat(2);
  return (b - a) / Rat(6) * (eval_naive(p, a) + Rat(4) * eval_naive(p, mid) + eval_naive(p, b));
}

inline Rat simpson(const PiecewiseDensity& g) {
  Rat sum(0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    sum += simpson(g.pieces()[i], g.breakpoints()[i], g.breakpoints()[i + 1]);
  }
  return sum;
}

// Monomials x0^e0 ... x_{d-1}^e_{d-1} of total degree k with e1 + ... >= m.
inline std::int64_t count_monomials(std::int64_t d, std::int64_t k, std::int64_t m) {
  std::int64_t count = 0;
  std::vector<std::int64_t> e(static_cast<std::size_t>(d), 0);
  // Odometer over exponents of x1..x_{d-1}; x0 takes the remainder.
  for (;;) {
    std::int64_t tail = 0;
    for (std::size_t i = 1; i < e.size(); ++i) tail += e[i];
    if (tail <= k && tail >= m) ++count;
    std::size_t i = 1;
    while (i < e.size()) {
      if (++e[i] <= k) break;
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) break;
  }
  return count;
}

// 7 a^3 / 4 with a = p/q.
inline Rat small_q_budget_closed_form(std::int64_t p, std::int64_t q) {
  return Rat(7, 4) * Rat(p, q).pow(3);
}

// 3p^3/(2(q-4)^3) + 9p^3(q-8)/(2q(q-4)^3), assembled from integers.
inline Rat large_q_bracket_closed_form(std::int64_t p, std::int64_t q) {
  const BigInt p3 = BigInt(p) * p * p;
  const BigInt r3 = BigInt(q - 4) * (q - 4) * (q - 4);
  return Rat(3 * p3, 2 * r3) + Rat(9 * p3 * (q - 8), 2 * q * r3);
}

}  // namespace jetcert::testing

#endif  // JETCERT_TESTS_ORACLES_HPP

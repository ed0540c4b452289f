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

#ifndef JETCERT_DISCRETE_BUDGET_HPP
#define JETCERT_DISCRETE_BUDGET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jetcert/rational.hpp"
#include "jetcert/threefold.hpp"

namespace jetcert {

/// Finite-n counterpart of a profile integral.
struct DiscreteSumReport {
  Candidate candidate;
  CountingMode mode;
  std::int64_t n = 1;
  /// (sum over k of the integer per-level bounds) / n^3.
  Rat exact_sum;
  Rat integral;
  /// |exact_sum - integral|
  Rat gap;
  std::vector<std::string> notes;

  friend bool operator==(const DiscreteSumReport&, const DiscreteSumReport&) = default;
};

/// Integer upper bounds on h^0_Y(P^2, O(k)) for k = 0 .. floor(3np/q), one
/// entry per k. Breakpoints n*alpha_i are rounded down when not integral.
std::vector<BigInt> discrete_jet_bounds(const Candidate& c, CountingMode mode, std::int64_t n,
                                        const ProfileOptions& options = {});

DiscreteSumReport discrete_budget_sum(const Candidate& c, CountingMode mode, std::int64_t n,
                                      const ProfileOptions& options = {});

}  // namespace jetcert

#endif  // JETCERT_DISCRETE_BUDGET_HPP

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

#ifndef JETCERT_GENERAL_HPP
#define JETCERT_GENERAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jetcert/exp_bounds.hpp"
#include "jetcert/rational.hpp"

namespace jetcert {

/// alpha^d - (alpha - eps)^d: d! times the normalized number of conditions
/// imposed by multiplicity alpha*n when each curve direction kills jets past
/// eps*n.
Rat f4_value(std::int64_t d, const Rat& alpha, const Rat& eps);

/// True iff f4_value(d, alpha, eps) < degree_bound, in which case sections of
/// nA with multiplicity alpha*n survive and m(A) > alpha.
bool multiplicity_criterion(std::int64_t d, const Rat& alpha, const Rat& eps,
                            const Rat& degree_bound = Rat(1));

/// eps = (3d+1)/(3d^2)
Rat critical_epsilon(std::int64_t d);
/// alpha = (3d+1)/(3d) = 1 + 1/(3d)
Rat critical_alpha(std::int64_t d);

/// One exactly checked relation `lhs relation rhs`.
struct InequalityStep {
  std::string label;
  std::string relation;  // "<" or "="
  Rat lhs;
  Rat rhs;
  bool holds = false;
  /// Integer form the inequality reduces to, when there is one.
  std::optional<Rat> reduced_lhs;
  std::optional<Rat> reduced_rhs;
  std::string detail;

  friend bool operator==(const InequalityStep&, const InequalityStep&) = default;
};

struct DimCertificate {
  std::int64_t d = 4;
  Rat degree_bound{1};
  Rat epsilon;
  Rat alpha;
  Rat f4;
  std::vector<InequalityStep> steps;
  /// 1-based index of the first failing step; empty when every step holds.
  std::optional<std::size_t> failed_at;

  bool contradiction_established() const { return !failed_at.has_value(); }
  /// "CONTRADICTION_ESTABLISHED" or "FAILED_AT(i)".
  std::string verdict() const;

  friend bool operator==(const DimCertificate&, const DimCertificate&) = default;
};

/// The chain showing eps(eta, A) <= (3d+1)/(3d^2) is impossible for d >= 4.
DimCertificate theorem_main_certificate(std::int64_t d, const Rat& degree_bound = Rat(1));

struct LemmaRow {
  std::int64_t d;
  Rat f4;
  bool pass;

  friend bool operator==(const LemmaRow&, const LemmaRow&) = default;
};

/// Enclosure of e^{1/3} - e^{-2/3}, the d -> infinity limit of the f4 values.
struct LimitRow {
  ExpBound e_one_third;
  ExpBound e_minus_two_thirds;
  /// upper(e^{1/3}) - lower(e^{-2/3})
  Rat difference_upper;
  /// lower(e^{1/3}) - upper(e^{-2/3})
  Rat difference_lower;
  Rat bound{9, 10};
  bool pass = false;

  friend bool operator==(const LimitRow&, const LimitRow&) = default;
};

struct LemmaCheckReport {
  std::int64_t d_min = 4;
  std::int64_t d_max = 4;
  Rat degree_bound{1};
  std::vector<LemmaRow> rows;
  LimitRow limit;
  bool all_pass = false;

  friend bool operator==(const LemmaCheckReport&, const LemmaCheckReport&) = default;
};

/// Checks f4 < degree_bound at the critical pair for every d in [d_min, d_max]
/// and encloses the limiting value with `terms` Taylor terms.
LemmaCheckReport lemma_l2_check(std::int64_t d_min, std::int64_t d_max,
                                const Rat& degree_bound = Rat(1), unsigned terms = 12);

}  // namespace jetcert

#endif  // JETCERT_GENERAL_HPP

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

#ifndef JETCERT_THREEFOLD_HPP
#define JETCERT_THREEFOLD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetcert/piecewise.hpp"
#include "jetcert/poly.hpp"
#include "jetcert/rational.hpp"

namespace jetcert {

/// A hypothetical curve of A-degree p and multiplicity q at a very general
/// point, i.e. a candidate Seshadri ratio p/q. Stored in lowest terms.
class Candidate {
 public:
  Candidate(std::int64_t p, std::int64_t q, std::int64_t dim = 3, Rat degree_bound = Rat(1));

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t dim() const { return dim_; }
  /// Lower bound for the top self-intersection A^dim.
  const Rat& degree_bound() const { return degree_bound_; }
  Rat ratio() const { return Rat(p_, q_); }

  std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const Candidate&, const Candidate&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t dim_;
  Rat degree_bound_;
};

/// LARGE_Q uses the tangent-cone defect (est1-est4); SMALL_Q uses the
/// reduced-point count on the middle range (est1, f3, est4).
enum class CountingMode { large_q, small_q };

std::string_view to_string(CountingMode mode);
std::optional<CountingMode> counting_mode_from_string(std::string_view s);

struct ProfileOptions {
  /// Multiplicity of the swept surface along the curve; sets the est4
  /// reflection level mu*alpha3 - (mu-1)*t.
  std::int64_t mu = 3;
  /// Symbolic-power factor: vanishing to order r along the curve gives
  /// membership in the floor(r/halving)-th power of its ideal.
  std::int64_t halving = 2;
  /// Replaces the worst-case alpha2 when set.
  std::optional<Rat> alpha2_override;
  /// Drop the est2 defect term (and the F3 point defect), giving the coarser
  /// bound used for the closed-form large-q comparison.
  bool drop_defects = false;

  friend bool operator==(const ProfileOptions&, const ProfileOptions&) = default;
};

struct CriticalNumbers {
  Rat alpha1;
  Rat alpha2;
  Rat alpha3;
  /// Value of alpha2 before clamping to alpha3.
  Rat alpha2_raw;
  /// alpha2_raw >= alpha3: the plateau interval disappears.
  bool collapsed = false;

  friend bool operator==(const CriticalNumbers&, const CriticalNumbers&) = default;
};

/// alpha1 = p/q, alpha3 = 2p/q, alpha2 = p/(q - halving^2) clamped to alpha3.
CriticalNumbers critical_numbers(const Candidate& c, const ProfileOptions& options = {});

/// The est2 density t^2/2 - q (t - alpha1)^2 / (2 halving^2), unrestricted.
Poly est2_density(const Candidate& c, const ProfileOptions& options = {});

/// Piecewise upper bound on the normalized jet dimensions over [0, 3p/q].
PiecewiseDensity build_profile(const Candidate& c, CountingMode mode,
                               const ProfileOptions& options = {});

/// Integral of a profile over its whole domain.
Rat total_budget(const PiecewiseDensity& g);

/// 6 x the defect-free LARGE_Q budget, i.e. the bracket that must stay below
/// the degree bound: 3 a2^3/2 + 9 (a3 - a2) a2^2 / 2.
Rat large_q_bracket(const Candidate& c, const ProfileOptions& options = {});

/// (3/2)(a2^3/6 + (a3 - a2) a2^2/2) evaluated directly from the critical numbers.
Rat simplified_large_q_bound(const CriticalNumbers& crit);

/// 3p^3/(2(q-4)^e) + 9p^3(q-8)/(2q(q-4)^3). With e = 3 this is the bracket;
/// e = 2 gives the variant with a squared first denominator, which does not match direct integration.
Rat closed_form_bracket(std::int64_t p, std::int64_t q, unsigned first_exponent = 3);

enum class Verdict { eliminated, not_eliminated };
std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);

/// A structured remark attached to a certificate.
struct Note {
  std::string code;
  std::string text;
  std::optional<Rat> value;

  friend bool operator==(const Note&, const Note&) = default;
};

struct ModeResult {
  CountingMode mode;
  Rat total_budget;
  Verdict verdict;

  friend bool operator==(const ModeResult&, const ModeResult&) = default;
};

struct ThreefoldCertificate {
  Candidate candidate;
  ProfileOptions options;
  CountingMode mode;
  CriticalNumbers criticals;
  PiecewiseDensity profile;
  Rat total_budget;
  Rat threshold;
  Verdict verdict;
  std::vector<ModeResult> mode_results;
  std::optional<Rat> large_q_bracket;
  std::vector<Note> notes;

  friend bool operator==(const ThreefoldCertificate&, const ThreefoldCertificate&) = default;
};

/// Smallest multiplicity for which the large-q profile is used for verdicts.
inline constexpr std::int64_t kLargeQMinMultiplicity = 10;

/// Budget check for a threefold candidate with 1/3 < p/q < 1/2. The candidate
/// is eliminated when the smallest admissible budget is below A^3/6.
ThreefoldCertificate certify_threefold(const Candidate& c, const ProfileOptions& options = {});

/// Reduced fractions 1/3 < p/q < 1/2 with q <= q_max, increasing.
std::vector<Candidate> enumerate_candidates(std::int64_t q_max, const Rat& degree_bound = Rat(1));

struct SweepEntry {
  Candidate candidate;
  CountingMode mode;
  Rat total_budget;
  Verdict verdict;
  std::optional<Rat> large_q_bracket;

  friend bool operator==(const SweepEntry&, const SweepEntry&) = default;
};

struct SweepReport {
  std::int64_t q_max = 0;
  Rat degree_bound{1};
  std::vector<SweepEntry> entries;
  bool all_eliminated = false;
  /// Largest large-q bracket over candidates with q >= 10.
  std::optional<Rat> tightest_bracket;
  std::optional<Candidate> tightest_bracket_at;
  /// Largest total_budget / threshold over all candidates.
  std::optional<Rat> tightest_budget_ratio;
  std::optional<Candidate> tightest_budget_at;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

SweepReport sweep(std::int64_t q_max, const Rat& degree_bound = Rat(1),
                  const ProfileOptions& options = {});

}  // namespace jetcert

#endif  // JETCERT_THREEFOLD_HPP

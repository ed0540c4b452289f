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

#include "jetcert/threefold.hpp"

#include <algorithm>
#include <numeric>

#include "jetcert/error.hpp"
#include "jetcert/jet_counts.hpp"

namespace jetcert {

Candidate::Candidate(std::int64_t p, std::int64_t q, std::int64_t dim, Rat degree_bound)
    : p_(p), q_(q), dim_(dim), degree_bound_(std::move(degree_bound)) {
  require(p >= 1 && q >= 1, ErrorKind::precondition,
          "candidate: p and q must be positive integers");
  require(dim >= 3, ErrorKind::precondition, "candidate: dimension must be >= 3");
  require(degree_bound_ >= Rat(1), ErrorKind::precondition, "candidate: degree bound must be >= 1");
  const std::int64_t g = std::gcd(p_, q_);
  p_ /= g;
  q_ /= g;
}

std::string_view to_string(CountingMode mode) {
  return mode == CountingMode::large_q ? "LARGE_Q" : "SMALL_Q";
}

std::optional<CountingMode> counting_mode_from_string(std::string_view s) {
  if (s == "LARGE_Q" || s == "large_q" || s == "large-q") return CountingMode::large_q;
  if (s == "SMALL_Q" || s == "small_q" || s == "small-q") return CountingMode::small_q;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  return v == Verdict::eliminated ? "ELIMINATED" : "NOT_ELIMINATED";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
  if (s == "ELIMINATED") return Verdict::eliminated;
  if (s == "NOT_ELIMINATED") return Verdict::not_eliminated;
  return std::nullopt;
}

namespace {

void require_threefold_range(const Candidate& c) {
  require(c.dim() == 3, ErrorKind::out_of_scope,
          "threefold certifier needs dimension 3, got " + std::to_string(c.dim()));
  require(c.ratio() < Rat(1, 2), ErrorKind::out_of_scope,
          "candidate " + c.str() + " is not below 1/2");
}

void validate_options(const ProfileOptions& options) {
  require(options.mu >= 2, ErrorKind::precondition, "profile: mu must be >= 2");
  require(options.halving >= 1, ErrorKind::precondition, "profile: halving factor must be >= 1");
}

Poly half_square() { return Poly::monomial(Rat(1, 2), 2); }

/// Pieces on [0, alpha3] before the reflected range.
struct FrontProfile {
  std::vector<Rat> breakpoints;
  std::vector<Poly> pieces;
  std::vector<Provenance> provenance;

  void add(const Rat& right, Poly piece, Provenance p) {
    breakpoints.push_back(right);
    pieces.push_back(std::move(piece));
    provenance.push_back(p);
  }
};

FrontProfile small_q_front(const Candidate& c, const ProfileOptions& options) {
  const Rat alpha1 = c.ratio();
  const Rat alpha3 = Rat(2) * alpha1;
  FrontProfile front{{Rat(0)}, {}, {}};
  front.add(alpha1, half_square(), Provenance::est1);
  // Sections vanish to order k - n*alpha1 at the tangent direction of the curve.
  Poly f3 = half_square();
  if (!options.drop_defects) f3 -= affine_compose(half_square(), Rat(1), -alpha1);
  front.add(alpha3, std::move(f3), Provenance::f3);
  return front;
}

FrontProfile large_q_front(const Candidate& c, const ProfileOptions& options) {
  require(c.q() > 2 * options.halving * options.halving, ErrorKind::inadmissible_mode,
          "LARGE_Q profile needs q > " + std::to_string(2 * options.halving * options.halving) +
              " so that alpha2 < alpha3; candidate " + c.str());
  const CriticalNumbers crit = critical_numbers(c, options);
  FrontProfile front{{Rat(0)}, {}, {}};
  front.add(crit.alpha1, half_square(), Provenance::est1);

  Poly est2 = options.drop_defects ? half_square() : est2_density(c, options);
  const Rat plateau = est2(crit.alpha2);
  front.add(crit.alpha2, std::move(est2), Provenance::est2);
  if (!crit.collapsed) front.add(crit.alpha3, Poly::constant(plateau), Provenance::est3);
  return front;
}

}  // namespace

CriticalNumbers critical_numbers(const Candidate& c, const ProfileOptions& options) {
  require_threefold_range(c);
  validate_options(options);
  const std::int64_t h2 = options.halving * options.halving;
  require(c.q() > h2, ErrorKind::degenerate_candidate,
          "alpha2 = p/(q - " + std::to_string(h2) + ") is undefined for q = " +
              std::to_string(c.q()));

  CriticalNumbers crit;
  crit.alpha1 = c.ratio();
  crit.alpha3 = Rat(2) * crit.alpha1;
  crit.alpha2_raw = options.alpha2_override.value_or(Rat(c.p(), c.q() - h2));
  require(crit.alpha2_raw > crit.alpha1, ErrorKind::precondition,
          "alpha2 must exceed alpha1 = " + crit.alpha1.str());
  crit.collapsed = crit.alpha2_raw >= crit.alpha3;
  crit.alpha2 = crit.collapsed ? crit.alpha3 : crit.alpha2_raw;
  return crit;
}

Poly est2_density(const Candidate& c, const ProfileOptions& options) {
  validate_options(options);
  const Rat alpha1 = c.ratio();
  const Rat inv_halving(1, options.halving);
  // Defect in the normalized order u = (t - alpha1)/halving.
  const Poly defect =
      affine_compose(fat_point_defect_density(c.q()), inv_halving, -alpha1 * inv_halving);
  return half_square() - defect;
}

PiecewiseDensity build_profile(const Candidate& c, CountingMode mode,
                               const ProfileOptions& options) {
  require_threefold_range(c);
  validate_options(options);
  FrontProfile front =
      mode == CountingMode::large_q ? large_q_front(c, options) : small_q_front(c, options);

  const Rat alpha3 = front.breakpoints.back();
  const Rat end = Rat(3) * c.ratio();
  const Rat mu(options.mu);
  const Rat slope = mu - Rat(1);
  // est4: level k maps to mu*alpha3 - (mu-1)*t on the front profile.
  const Rat top = mu * alpha3;
  const Rat s_floor = max(Rat(0), top - slope * end);
  const auto t_of = [&](const Rat& s) { return (top - s) / slope; };

  std::vector<Rat> breakpoints = front.breakpoints;
  std::vector<Poly> pieces = front.pieces;
  std::vector<Provenance> provenance = front.provenance;
  for (std::size_t i = front.pieces.size(); i-- > 0;) {
    const Rat s_lo = max(front.breakpoints[i], s_floor);
    const Rat& s_hi = front.breakpoints[i + 1];
    if (s_lo >= s_hi) continue;
    breakpoints.push_back(t_of(s_lo));
    pieces.push_back(affine_compose(front.pieces[i], -slope, top));
    provenance.push_back(Provenance::est4);
  }
  if (breakpoints.back() < end) {
    // mu > 3: the residual multiplicity would be negative, no sections remain.
    breakpoints.push_back(end);
    pieces.emplace_back();
    provenance.push_back(Provenance::est4);
  }
  return PiecewiseDensity(std::move(breakpoints), std::move(pieces), std::move(provenance));
}

Rat total_budget(const PiecewiseDensity& g) { return piecewise_integrate(g, g.lower(), g.upper()); }

Rat large_q_bracket(const Candidate& c, const ProfileOptions& options) {
  ProfileOptions coarse = options;
  coarse.drop_defects = true;
  return Rat(6) * total_budget(build_profile(c, CountingMode::large_q, coarse));
}

Rat simplified_large_q_bound(const CriticalNumbers& crit) {
  const Rat& a2 = crit.alpha2;
  const Rat& a3 = crit.alpha3;
  return Rat(3, 2) * (a2.pow(3) / Rat(6) + (a3 - a2) * a2.pow(2) / Rat(2));
}

Rat closed_form_bracket(std::int64_t p, std::int64_t q, unsigned first_exponent) {
  const Rat p3 = Rat(p).pow(3);
  const Rat shifted(q - 4);
  return Rat(3) * p3 / (Rat(2) * shifted.pow(first_exponent)) +
         Rat(9) * p3 * Rat(q - 8) / (Rat(2) * Rat(q) * shifted.pow(3));
}

ThreefoldCertificate certify_threefold(const Candidate& c, const ProfileOptions& options) {
  require_threefold_range(c);
  require(c.ratio() > Rat(1, 3), ErrorKind::out_of_scope,
          "candidate " + c.str() + " is at most 1/3 and already excluded by the 1/dim bound");
  validate_options(options);

  const Rat threshold = c.degree_bound() / Rat(6);
  const auto judge = [&](const Rat& budget) {
    return budget < threshold ? Verdict::eliminated : Verdict::not_eliminated;
  };

  const bool use_large_q = c.q() >= kLargeQMinMultiplicity &&
                           c.q() > 2 * options.halving * options.halving;
  std::vector<CountingMode> modes{CountingMode::small_q};
  if (use_large_q) modes.push_back(CountingMode::large_q);

  std::vector<ModeResult> results;
  std::optional<PiecewiseDensity> best_profile;
  std::size_t best = 0;
  for (CountingMode mode : modes) {
    PiecewiseDensity g = build_profile(c, mode, options);
    Rat budget = total_budget(g);
    if (!best_profile || budget < results[best].total_budget) {
      best = results.size();
      best_profile = g;
    }
    results.push_back({mode, budget, judge(budget)});
  }

  ThreefoldCertificate cert{
      c,
      options,
      results[best].mode,
      critical_numbers(c, options),
      *best_profile,
      results[best].total_budget,
      threshold,
      results[best].verdict,
      results,
      std::nullopt,
      {},
  };

  cert.notes.push_back({"normalized_budget",
                        "total budget written as (1/6)(value); compare value against A^3 >= " +
                            c.degree_bound().str(),
                        Rat(6) * cert.total_budget});
  cert.notes.push_back({"reflection_multiplicity",
                        "est4 range uses multiplicity >= " + std::to_string(options.mu) +
                            " of the swept surface along the curve",
                        Rat(options.mu)});
  if (cert.criticals.collapsed) {
    cert.notes.push_back({"alpha2_collapsed",
                          "worst-case alpha2 = " + cert.criticals.alpha2_raw.str() +
                              " >= alpha3; third interval removed",
                          cert.criticals.alpha2_raw});
  }

  if (use_large_q) {
    const Rat bracket = large_q_bracket(c, options);
    cert.large_q_bracket = bracket;
    const PiecewiseDensity& full = cert.mode == CountingMode::large_q
                                       ? cert.profile
                                       : build_profile(c, CountingMode::large_q, options);
    const Rat dropped = bracket / Rat(6) - total_budget(full);
    cert.notes.push_back({"dropped_defects",
                          "simplified bound omits -q(a2-a1)^3/24 and -(a3-a2)q(a2-a1)^2/8 "
                          "(value: their total weight in the budget)",
                          dropped});
    cert.notes.push_back({"large_q_bracket",
                          "defect-free bracket 3a2^3/2 + 9(a3-a2)a2^2/2 must be < A^3",
                          bracket});
    if (options == ProfileOptions{}) {
      const Rat squared_form = closed_form_bracket(c.p(), c.q(), 2);
      cert.notes.push_back({"squared_closed_form",
                            squared_form == bracket
                                ? "closed form with (q-4)^2 first denominator agrees"
                                : "closed form with (q-4)^2 first denominator disagrees with "
                                  "direct integration; the (q-4)^3 form is used",
                            squared_form});
    }
  }
  return cert;
}

std::vector<Candidate> enumerate_candidates(std::int64_t q_max, const Rat& degree_bound) {
  std::vector<Candidate> out;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    for (std::int64_t p = q / 3; 2 * p < q; ++p) {
      if (3 * p > q && std::gcd(p, q) == 1) out.emplace_back(p, q, 3, degree_bound);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.ratio() < b.ratio(); });
  return out;
}

SweepReport sweep(std::int64_t q_max, const Rat& degree_bound, const ProfileOptions& options) {
  require(q_max >= 9, ErrorKind::precondition, "sweep: q_max must be >= 9");
  SweepReport report;
  report.q_max = q_max;
  report.degree_bound = degree_bound;
  report.all_eliminated = true;

  for (const Candidate& c : enumerate_candidates(q_max, degree_bound)) {
    const ThreefoldCertificate cert = certify_threefold(c, options);
    report.entries.push_back(
        {c, cert.mode, cert.total_budget, cert.verdict, cert.large_q_bracket});
    report.all_eliminated = report.all_eliminated && cert.verdict == Verdict::eliminated;

    if (cert.large_q_bracket &&
        (!report.tightest_bracket || *cert.large_q_bracket > *report.tightest_bracket)) {
      report.tightest_bracket = cert.large_q_bracket;
      report.tightest_bracket_at = c;
    }
    const Rat ratio = cert.total_budget / cert.threshold;
    if (!report.tightest_budget_ratio || ratio > *report.tightest_budget_ratio) {
      report.tightest_budget_ratio = ratio;
      report.tightest_budget_at = c;
    }
  }
  return report;
}

}  // namespace jetcert

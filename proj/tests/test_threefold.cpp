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

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "jetcert/discrete_budget.hpp"
#include "jetcert/error.hpp"
#include "jetcert/threefold.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace jetcert;
using jetcert::testing::Gen;
using jetcert::testing::large_q_bracket_closed_form;
using jetcert::testing::simpson;
using jetcert::testing::small_q_budget_closed_form;

namespace {

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected jetcert::Error");
  return ErrorKind::precondition;
}

const Note* find_note(const ThreefoldCertificate& c, std::string_view code) {
  const auto it = std::find_if(c.notes.begin(), c.notes.end(),
                               [&](const Note& n) { return n.code == code; });
  return it == c.notes.end() ? nullptr : &*it;
}

Rat front_integral(const PiecewiseDensity& g, const Rat& alpha3) {
  return piecewise_integrate(g, Rat(0), alpha3);
}

}  // namespace

TEST_SUITE("candidate") {
  TEST_CASE("non-reduced input is reduced") {
    const Candidate c(4, 10);
    CHECK(c.p() == 2);
    CHECK(c.q() == 5);
    CHECK(c == Candidate(2, 5));
    CHECK(c.ratio() == Rat(2, 5));
  }

  TEST_CASE("construction preconditions") {
    CHECK(kind_of([] { Candidate(0, 5); }) == ErrorKind::precondition);
    CHECK(kind_of([] { Candidate(1, 5, 2); }) == ErrorKind::precondition);
    CHECK(kind_of([] { Candidate(1, 5, 3, Rat(1, 2)); }) == ErrorKind::precondition);
  }
}

TEST_SUITE("critical numbers") {
  TEST_CASE("examples") {
    const CriticalNumbers two_fifths = critical_numbers(Candidate(4, 10));
    CHECK(two_fifths.alpha1 == Rat(2, 5));
    CHECK(two_fifths.alpha2_raw == Rat(2));
    CHECK(two_fifths.alpha2 == Rat(4, 5));
    CHECK(two_fifths.collapsed);
    CHECK(two_fifths.alpha3 == Rat(4, 5));

    const CriticalNumbers five_elevenths = critical_numbers(Candidate(5, 11));
    CHECK(five_elevenths.alpha1 == Rat(5, 11));
    CHECK(five_elevenths.alpha2 == Rat(5, 7));
    CHECK(five_elevenths.alpha3 == Rat(10, 11));
    CHECK_FALSE(five_elevenths.collapsed);

    const CriticalNumbers three_sevenths = critical_numbers(Candidate(3, 7));
    CHECK(three_sevenths.alpha2_raw == Rat(1));
    CHECK(three_sevenths.alpha3 == Rat(6, 7));
    CHECK(three_sevenths.collapsed);
  }

  TEST_CASE("collapse happens exactly for q <= 8") {
    for (std::int64_t q = 5; q <= 40; ++q) {
      for (std::int64_t p = 1; 2 * p < q; ++p) {
        const Candidate c(p, q);
        if (c.q() != q) continue;
        CHECK(critical_numbers(c).collapsed == (q <= 8));
      }
    }
  }

  TEST_CASE("errors") {
    CHECK(kind_of([] { critical_numbers(Candidate(1, 4)); }) == ErrorKind::degenerate_candidate);
    CHECK(kind_of([] { critical_numbers(Candidate(1, 2)); }) == ErrorKind::out_of_scope);
    CHECK(kind_of([] { critical_numbers(Candidate(3, 5)); }) == ErrorKind::out_of_scope);
    CHECK(kind_of([] { critical_numbers(Candidate(2, 7, 4)); }) == ErrorKind::out_of_scope);
  }

  TEST_CASE("alpha2 override") {
    ProfileOptions o;
    o.alpha2_override = Rat(3, 5);
    const CriticalNumbers c = critical_numbers(Candidate(5, 11), o);
    CHECK(c.alpha2 == Rat(3, 5));
    CHECK_FALSE(c.collapsed);
    o.alpha2_override = Rat(1, 3);
    CHECK(kind_of([&] { critical_numbers(Candidate(5, 11), o); }) == ErrorKind::precondition);
  }

  TEST_CASE("property: est2 density peaks at p/(q-4)") {
    Gen gen(0x5eed0201);
    for (int i = 0; i < 20; ++i) {
      const Candidate c = gen.candidate(10, 200);
      const ArgMax m = quadratic_argmax_on_interval(est2_density(c), c.ratio(), Rat(1));
      REQUIRE(m.argmax == Rat(c.p(), c.q() - 4));
    }
  }
}

TEST_SUITE("profiles") {
  TEST_CASE("3/7 small-q profile") {
    const PiecewiseDensity g = build_profile(Candidate(3, 7), CountingMode::small_q);
    CHECK(g.lower() == Rat(0));
    CHECK(g.upper() == Rat(9, 7));
    CHECK(total_budget(g) == Rat(27, 196));
    CHECK(total_budget(g) == Rat(1, 6) * Rat(567, 686));
    CHECK(g.provenance().front() == Provenance::est1);
    CHECK(g.provenance()[1] == Provenance::f3);
    CHECK(g.provenance().back() == Provenance::est4);
  }

  TEST_CASE("4/9 small-q budget") {
    const PiecewiseDensity g = build_profile(Candidate(4, 9), CountingMode::small_q);
    CHECK(total_budget(g) == Rat(112, 729));
    CHECK(total_budget(g) == Rat(1, 6) * Rat(224, 243));
  }

  TEST_CASE("5/11 large-q plateau") {
    const PiecewiseDensity g = build_profile(Candidate(5, 11), CountingMode::large_q);
    const Rat a2(5, 7);
    const Rat a1(5, 11);
    const Rat plateau = a2 * a2 / Rat(2) - Rat(11) * (a2 - a1) * (a2 - a1) / Rat(8);
    CHECK(plateau == Rat(25, 154));
    const std::size_t i = g.piece_index(Rat(4, 5));
    CHECK(g.provenance()[i] == Provenance::est3);
    CHECK(g.pieces()[i] == Poly::constant(plateau));
    CHECK(g(Rat(10, 11)) == plateau);
    CHECK(std::count(g.provenance().begin(), g.provenance().end(), Provenance::est4) >= 1);
    CHECK(g.provenance()[0] == Provenance::est1);
    CHECK(g.provenance()[1] == Provenance::est2);
  }

  TEST_CASE("large-q needs q >= 9") {
    CHECK(kind_of([] { build_profile(Candidate(3, 7), CountingMode::large_q); }) ==
          ErrorKind::inadmissible_mode);
    CHECK(kind_of([] { build_profile(Candidate(3, 8), CountingMode::large_q); }) ==
          ErrorKind::inadmissible_mode);
    CHECK_NOTHROW(build_profile(Candidate(4, 9), CountingMode::large_q));
  }

  TEST_CASE("mu above 3 leaves a zero tail") {
    ProfileOptions o;
    o.mu = 4;
    const PiecewiseDensity g = build_profile(Candidate(3, 7), CountingMode::small_q, o);
    CHECK(g.upper() == Rat(9, 7));
    CHECK(g(Rat(9, 7)) == Rat(0));
    CHECK(total_budget(g) < Rat(27, 196));
  }

  TEST_CASE("property: profiles vanish at 0, are continuous and dominated by t^2/2") {
    Gen gen(0x5eed0202);
    for (int i = 0; i < 40; ++i) {
      const Candidate c = gen.candidate(5, 120);
      std::vector<CountingMode> modes{CountingMode::small_q};
      if (c.q() >= 9) modes.push_back(CountingMode::large_q);
      for (const CountingMode mode : modes) {
        const PiecewiseDensity g = build_profile(c, mode);
        REQUIRE(g(Rat(0)) == Rat(0));
        const auto& bp = g.breakpoints();
        for (std::size_t j = 1; j + 1 < bp.size(); ++j) {
          // Left piece at the breakpoint equals the right piece's limit.
          REQUIRE(poly_eval(g.pieces()[j - 1], bp[j]) == poly_eval(g.pieces()[j], bp[j]));
        }
        for (int s = 0; s < 20; ++s) {
          const Rat t = gen.rational_in(g.lower(), g.upper());
          REQUIRE(g(t) >= Rat(0));
          REQUIRE(g(t) <= t * t / Rat(2));
        }
      }
    }
  }

  TEST_CASE("property: small-q budget is 7a^3/4 and matches Simpson") {
    Gen gen(0x5eed0203);
    for (int i = 0; i < 40; ++i) {
      const Candidate c = gen.candidate(3, 300);
      const PiecewiseDensity g = build_profile(c, CountingMode::small_q);
      REQUIRE(total_budget(g) == small_q_budget_closed_form(c.p(), c.q()));
      REQUIRE(total_budget(g) == simpson(g));
    }
  }

  TEST_CASE("property: reflected range carries half the front integral") {
    Gen gen(0x5eed0204);
    for (int i = 0; i < 20; ++i) {
      const Candidate c = gen.candidate(10, 200);
      for (const CountingMode mode : {CountingMode::small_q, CountingMode::large_q}) {
        const PiecewiseDensity g = build_profile(c, mode);
        const Rat alpha3 = Rat(2) * c.ratio();
        REQUIRE(integrate_provenance(g, Provenance::est4) == front_integral(g, alpha3) / Rat(2));
      }
    }
  }

  TEST_CASE("property: defect-free large-q budget matches the closed forms") {
    Gen gen(0x5eed0205);
    for (int i = 0; i < 20; ++i) {
      const Candidate c = gen.candidate(10, 300);
      const Rat bracket = large_q_bracket(c);
      REQUIRE(bracket == Rat(6) * simplified_large_q_bound(critical_numbers(c)));
      REQUIRE(bracket == large_q_bracket_closed_form(c.p(), c.q()));
      REQUIRE(bracket == closed_form_bracket(c.p(), c.q()));
      REQUIRE(closed_form_bracket(c.p(), c.q(), 2) != bracket);
    }
  }
}

TEST_SUITE("certify") {
  TEST_CASE("3/7") {
    const ThreefoldCertificate cert = certify_threefold(Candidate(3, 7));
    CHECK(cert.mode == CountingMode::small_q);
    CHECK(cert.total_budget == Rat(27, 196));
    CHECK(cert.threshold == Rat(1, 6));
    CHECK(cert.verdict == Verdict::eliminated);
    const Note* n = find_note(cert, "normalized_budget");
    REQUIRE(n != nullptr);
    CHECK(n->value == Rat(567, 686));
    CHECK(find_note(cert, "alpha2_collapsed") != nullptr);
    CHECK(cert.mode_results.size() == 1);
  }

  TEST_CASE("4/9 stays in small-q") {
    const ThreefoldCertificate cert = certify_threefold(Candidate(4, 9));
    CHECK(cert.total_budget == Rat(112, 729));
    CHECK(find_note(cert, "normalized_budget")->value == Rat(224, 243));
    CHECK(cert.verdict == Verdict::eliminated);
    CHECK(cert.mode_results.size() == 1);
    // The defect-free large-q bracket fails for q = 9.
    CHECK(large_q_bracket(Candidate(4, 9)) > Rat(1));
  }

  TEST_CASE("5/11 in both modes") {
    const ThreefoldCertificate cert = certify_threefold(Candidate(5, 11));
    CHECK(cert.mode == CountingMode::large_q);
    CHECK(cert.verdict == Verdict::eliminated);
    REQUIRE(cert.mode_results.size() == 2);
    for (const auto& m : cert.mode_results) CHECK(m.verdict == Verdict::eliminated);
    CHECK(cert.mode_results[0].total_budget == Rat(875, 5324));
    REQUIRE(cert.large_q_bracket.has_value());
    CHECK(*cert.large_q_bracket == Rat(375, 686) + Rat(3375, 7546));
    CHECK(*cert.large_q_bracket == Rat(3750, 3773));
    CHECK(find_note(cert, "dropped_defects") != nullptr);
    const Note* squared = find_note(cert, "squared_closed_form");
    REQUIRE(squared != nullptr);
    CHECK(squared->value != cert.large_q_bracket);
  }

  TEST_CASE("verdict matches budget vs threshold") {
    for (const Candidate& c : enumerate_candidates(30)) {
      const ThreefoldCertificate cert = certify_threefold(c);
      CHECK((cert.verdict == Verdict::eliminated) == (cert.total_budget < cert.threshold));
      CHECK(cert.profile.upper() == Rat(3) * c.ratio());
    }
  }

  TEST_CASE("a looser mu can fail to eliminate") {
    ProfileOptions o;
    o.mu = 2;
    const ThreefoldCertificate cert = certify_threefold(Candidate(4, 9), o);
    CHECK(cert.verdict == Verdict::not_eliminated);
  }

  TEST_CASE("out of scope") {
    CHECK(kind_of([] { certify_threefold(Candidate(1, 3)); }) == ErrorKind::out_of_scope);
    CHECK(kind_of([] { certify_threefold(Candidate(2, 7)); }) == ErrorKind::out_of_scope);
    CHECK(kind_of([] { certify_threefold(Candidate(1, 2)); }) == ErrorKind::out_of_scope);
  }

  TEST_CASE("property: small-q elimination is monotone in the ratio") {
    const auto cands = enumerate_candidates(60);
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) {
      const Rat lo = total_budget(build_profile(cands[i], CountingMode::small_q));
      const Rat hi = total_budget(build_profile(cands[i + 1], CountingMode::small_q));
      REQUIRE(lo < hi);
    }
  }

  TEST_CASE("property: discrete verdicts agree for large n") {
    Gen gen(0x5eed0206);
    for (int i = 0; i < 8; ++i) {
      const Candidate c = gen.candidate(5, 16);
      const ThreefoldCertificate cert = certify_threefold(c);
      const DiscreteSumReport r = discrete_budget_sum(c, cert.mode, 64 * c.q());
      const Rat margin = cert.threshold - cert.total_budget;
      if (r.gap < margin) REQUIRE(r.exact_sum < cert.threshold);
    }
  }
}

TEST_SUITE("enumerate and sweep") {
  TEST_CASE("enumerate_candidates examples") {
    const auto nine = enumerate_candidates(9);
    REQUIRE(nine.size() == 4);
    CHECK(nine[0] == Candidate(3, 8));
    CHECK(nine[1] == Candidate(2, 5));
    CHECK(nine[2] == Candidate(3, 7));
    CHECK(nine[3] == Candidate(4, 9));
    CHECK(enumerate_candidates(4).empty());
    const auto eleven = enumerate_candidates(11);
    CHECK(eleven.size() == 6);
    CHECK(std::find(eleven.begin(), eleven.end(), Candidate(4, 11)) != eleven.end());
    CHECK(std::find(eleven.begin(), eleven.end(), Candidate(5, 11)) != eleven.end());
  }

  TEST_CASE("property: enumeration is sorted, reduced and complete") {
    for (std::int64_t q_max : {12, 25, 40}) {
      const auto list = enumerate_candidates(q_max);
      std::size_t brute = 0;
      for (std::int64_t q = 2; q <= q_max; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
          if (std::gcd(p, q) == 1 && 3 * p > q && 2 * p < q) ++brute;
        }
      }
      CHECK(list.size() == brute);
      for (std::size_t i = 0; i + 1 < list.size(); ++i) CHECK(list[i].ratio() < list[i + 1].ratio());
    }
  }

  TEST_CASE("sweep q <= 9") {
    const SweepReport r = sweep(9);
    CHECK(r.entries.size() == 4);
    CHECK(r.all_eliminated);
    CHECK_FALSE(r.tightest_bracket.has_value());
    CHECK(r.tightest_budget_at == Candidate(4, 9));
  }

  TEST_CASE("sweep with a larger degree bound") {
    const SweepReport r = sweep(9, Rat(10));
    CHECK(r.all_eliminated);
    CHECK(r.entries.front().candidate.degree_bound() == Rat(10));
  }

  TEST_CASE("sweep q <= 60 pins the tightest bracket") {
    const SweepReport r = sweep(60);
    CHECK(r.all_eliminated);
    CHECK(r.tightest_bracket == Rat(3750, 3773));
    CHECK(r.tightest_bracket_at == Candidate(5, 11));
    CHECK(kind_of([] { sweep(8); }) == ErrorKind::precondition);
  }
}

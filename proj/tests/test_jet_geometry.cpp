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

#include "jetcert/discrete_budget.hpp"
#include "jetcert/error.hpp"
#include "jetcert/jet_counts.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace jetcert;
using jetcert::testing::count_monomials;
using jetcert::testing::Gen;

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

// Per-level bounds for 2/5 in SMALL_Q mode at n = 10, tabulated by hand:
// n*alpha1 = 4, n*alpha3 = 8, last level 12.
//   k = 0..4    all k-jets, C(k+2, 2)
//   k = 5..8    vanishing order k - 5 at a point: C(k+2, 2) - C(k-4, 2)
//   k = 9..12   residual level k - 3(k - 8), bounded by the same front values
const std::int64_t kTwoFifthsN10[] = {1, 3, 6, 10, 15, 21, 27, 33, 39, 27, 15, 6, 1};

}  // namespace

TEST_SUITE("jet counts") {
  TEST_CASE("jet_space_dim examples") {
    CHECK(jet_space_dim(3, 0) == 1);
    CHECK(jet_space_dim(3, 5) == 21);
    CHECK(jet_space_dim(4, 3) == 20);
    CHECK(kind_of([] { jet_space_dim(1, 3); }) == ErrorKind::precondition);
    CHECK(kind_of([] { jet_space_dim(3, -1); }) == ErrorKind::precondition);
  }

  TEST_CASE("point_jet_dim examples") {
    CHECK(point_jet_dim(3, 5, 0) == 21);
    CHECK(point_jet_dim(3, 5, 6) == 0);
    CHECK(point_jet_dim(3, 5, 2) == 18);
    CHECK(point_jet_dim(3, 5, 2) == count_monomials(3, 5, 2));
    CHECK(point_jet_dim(JetCountSpec{3, 5, 2}) == 18);
    CHECK(kind_of([] { point_jet_dim(3, 5, -1); }) == ErrorKind::precondition);
  }

  TEST_CASE("monomial oracle examples") {
    CHECK(monomial_vanishing_oracle(3, 2, 1) == 5);
    CHECK(monomial_vanishing_oracle(3, 2, 3) == 0);
    for (std::int64_t k = 0; k <= 12; ++k) {
      for (std::int64_t m = 0; m <= k; ++m) CHECK(monomial_vanishing_oracle(2, k, m) == k - m + 1);
    }
    CHECK(kind_of([] { monomial_vanishing_oracle(3, kOracleMaxLevel + 1, 0); }) ==
          ErrorKind::resource);
  }

  TEST_CASE("monomial oracle agrees with an odometer count") {
    for (std::int64_t d = 2; d <= 4; ++d) {
      for (std::int64_t k = 0; k <= 12; ++k) {
        for (std::int64_t m = 0; m <= k + 2; ++m) {
          REQUIRE(monomial_vanishing_oracle(d, k, m) == count_monomials(d, k, m));
        }
      }
    }
  }

  TEST_CASE("property: oracle equivalence on the full grid") {
    for (std::int64_t d = 2; d <= 4; ++d) {
      for (std::int64_t k = 0; k <= 30; ++k) {
        for (std::int64_t m = 0; m <= k + 2; ++m) {
          REQUIRE(point_jet_dim(d, k, m) == monomial_vanishing_oracle(d, k, m));
        }
      }
    }
  }

  TEST_CASE("property: monotone in m and k, telescoping") {
    Gen gen(0x5eed0101);
    for (int i = 0; i < 300; ++i) {
      const auto d = gen.integer(2, 6);
      const auto k = gen.integer(0, 60);
      const auto m = gen.integer(0, k + 3);
      REQUIRE(point_jet_dim(d, k, m + 1) <= point_jet_dim(d, k, m));
      REQUIRE(point_jet_dim(d, k + 1, m) >= point_jet_dim(d, k, m));
      BigInt killed = 0;
      for (std::int64_t j = 0; j < m && j <= k; ++j) killed += binomial(j + d - 2, d - 2);
      REQUIRE(jet_space_dim(d, k) - point_jet_dim(d, k, m) == killed);
    }
  }

  TEST_CASE("fat point defect density") {
    CHECK(fat_point_defect_density(1) == Poly::monomial(Rat(1, 2), 2));
    const Poly defect7 = affine_compose(fat_point_defect_density(7), Rat(1, 2), Rat(-3, 14));
    CHECK(defect7 == affine_compose(Poly::monomial(Rat(7, 8), 2), Rat(1), Rat(-3, 7)));
    const Rat a1(3, 7);
    CHECK(poly_integrate(defect7, a1, a1) == Rat(0));
    CHECK(kind_of([] { fat_point_defect_density(0); }) == ErrorKind::precondition);
  }
}

TEST_SUITE("discrete budget") {
  TEST_CASE("2/5 at n = 10 matches the hand table") {
    const auto bounds = discrete_jet_bounds(Candidate(2, 5), CountingMode::small_q, 10);
    REQUIRE(bounds.size() == std::size(kTwoFifthsN10));
    std::int64_t total = 0;
    for (std::size_t k = 0; k < bounds.size(); ++k) {
      CHECK(bounds[k] == kTwoFifthsN10[k]);
      total += kTwoFifthsN10[k];
    }
    const DiscreteSumReport r = discrete_budget_sum(Candidate(2, 5), CountingMode::small_q, 10);
    CHECK(r.exact_sum == Rat(total, 1000));
    CHECK(r.exact_sum == Rat(51, 250));
    CHECK(r.integral == Rat(14, 125));
    CHECK(r.gap == Rat(51, 250) - Rat(14, 125));
  }

  TEST_CASE("front levels use point vanishing counts") {
    // 3/7 at n = 7: n*alpha1 = 3, n*alpha3 = 6.
    const auto bounds = discrete_jet_bounds(Candidate(3, 7), CountingMode::small_q, 7);
    for (std::int64_t k = 0; k <= 3; ++k) CHECK(bounds[k] == count_monomials(3, k, 0));
    for (std::int64_t k = 4; k <= 6; ++k) CHECK(bounds[k] == count_monomials(3, k, k - 4));
  }

  TEST_CASE("inadmissible mode propagates") {
    CHECK(kind_of([] { discrete_budget_sum(Candidate(3, 7), CountingMode::large_q, 70); }) ==
          ErrorKind::inadmissible_mode);
    CHECK(kind_of([] { discrete_budget_sum(Candidate(3, 7), CountingMode::small_q, 0); }) ==
          ErrorKind::precondition);
  }

  TEST_CASE("large-q report records the plateau simplification") {
    const DiscreteSumReport r = discrete_budget_sum(Candidate(5, 11), CountingMode::large_q, 77);
    bool plateau_note = false;
    for (const auto& note : r.notes) plateau_note = plateau_note || note.find("plateau") != std::string::npos;
    CHECK(plateau_note);
  }

  TEST_CASE("3/7 sums approach 27/196") {
    Rat prev_gap;
    for (std::int64_t m : {10, 20, 40, 80}) {
      const DiscreteSumReport r = discrete_budget_sum(Candidate(3, 7), CountingMode::small_q, 7 * m);
      CHECK(r.integral == Rat(27, 196));
      if (m > 10) CHECK(r.gap < prev_gap);
      prev_gap = r.gap;
    }
    CHECK(prev_gap < Rat(1, 500));
  }

  TEST_CASE("property: gap is non-negative, halves with n, n*gap bounded") {
    Gen gen(0x5eed0102);
    for (int i = 0; i < 12; ++i) {
      const Candidate c = gen.candidate(5, 23);
      std::vector<CountingMode> modes{CountingMode::small_q};
      if (c.q() >= 10) modes.push_back(CountingMode::large_q);
      for (const CountingMode mode : modes) {
        const std::int64_t base = 8 * c.q();
        const DiscreteSumReport r1 = discrete_budget_sum(c, mode, base);
        const DiscreteSumReport r2 = discrete_budget_sum(c, mode, 2 * base);
        const DiscreteSumReport r4 = discrete_budget_sum(c, mode, 4 * base);
        REQUIRE(r1.gap >= Rat(0));
        REQUIRE(r2.gap < r1.gap);
        REQUIRE(r4.gap < r2.gap);
        for (const auto* r : {&r1, &r2, &r4}) REQUIRE(Rat(r->n) * r->gap < Rat(4));
      }
    }
  }
}

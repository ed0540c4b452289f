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

#ifndef JETCERT_JET_COUNTS_HPP
#define JETCERT_JET_COUNTS_HPP

#include <cstdint>

#include "jetcert/poly.hpp"
#include "jetcert/rational.hpp"

namespace jetcert {

/// Largest degree monomial_vanishing_oracle will enumerate.
inline constexpr std::int64_t kOracleMaxLevel = 40;

/// Jet counting on the exceptional divisor P^{dim-1} of the blow-up of a
/// dim-dimensional variety.
struct JetCountSpec {
  std::int64_t dim = 3;
  std::int64_t level = 0;
  std::int64_t vanishing_order = 0;

  void validate() const;
};

/// h^0(P^{d-1}, O(k)) = C(k+d-1, d-1): all k-jets.
BigInt jet_space_dim(std::int64_t d, std::int64_t k);

/// Degree-k forms in d variables vanishing to order >= m at a coordinate point.
BigInt point_jet_dim(std::int64_t d, std::int64_t k, std::int64_t m);
inline BigInt point_jet_dim(const JetCountSpec& s) {
  return point_jet_dim(s.dim, s.level, s.vanishing_order);
}

/// Brute-force count of monomials of degree k in d variables whose degree in
/// the last d-1 variables is at least m. Independent check on point_jet_dim.
std::int64_t monomial_vanishing_oracle(std::int64_t d, std::int64_t k, std::int64_t m);

/// Asymptotic colength density q*u^2/2 of the r-th power of a degree-q
/// zero-dimensional scheme in P^2, with u = r/n.
Poly fat_point_defect_density(std::int64_t q);

}  // namespace jetcert

#endif  // JETCERT_JET_COUNTS_HPP

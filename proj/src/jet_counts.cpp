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

#include "jetcert/jet_counts.hpp"

#include <functional>
#include <string>
#include <vector>

#include "jetcert/error.hpp"

namespace jetcert {

void JetCountSpec::validate() const {
  require(dim >= 2, ErrorKind::precondition, "jet count: dim must be >= 2");
  require(level >= 0, ErrorKind::precondition, "jet count: level must be >= 0");
  require(vanishing_order >= 0, ErrorKind::precondition,
          "jet count: vanishing order must be >= 0");
}

BigInt jet_space_dim(std::int64_t d, std::int64_t k) {
  JetCountSpec{d, k, 0}.validate();
  return binomial(k + d - 1, d - 1);
}

BigInt point_jet_dim(std::int64_t d, std::int64_t k, std::int64_t m) {
  JetCountSpec{d, k, m}.validate();
  if (m > k) return 0;
  // Forms of degree k restricted to the affine chart at the point: the degree-j
  // part in the d-1 local coordinates has C(j+d-2, d-2) monomials, j = m..k.
  // Summing gives C(k+d-1, d-1) - C(m+d-2, d-1) by the hockey-stick identity.
  return binomial(k + d - 1, d - 1) - binomial(m + d - 2, d - 1);
}

std::int64_t monomial_vanishing_oracle(std::int64_t d, std::int64_t k, std::int64_t m) {
  JetCountSpec{d, k, m}.validate();
  require(k <= kOracleMaxLevel, ErrorKind::resource,
          "monomial oracle: level " + std::to_string(k) + " exceeds enumeration guard " +
              std::to_string(kOracleMaxLevel));

  // Enumerate exponent vectors (e_0, ..., e_{d-1}) with sum k; e_0 belongs to
  // the variable that does not vanish at [1:0:...:0].
  std::vector<std::int64_t> exponents(static_cast<std::size_t>(d), 0);
  std::int64_t count = 0;
  std::function<void(std::size_t, std::int64_t)> visit = [&](std::size_t index,
                                                              std::int64_t remaining) {
    if (index + 1 == exponents.size()) {
      exponents[index] = remaining;
      std::int64_t order = 0;
      for (std::size_t i = 1; i < exponents.size(); ++i) order += exponents[i];
      if (order >= m) ++count;
      return;
    }
    for (std::int64_t e = 0; e <= remaining; ++e) {
      exponents[index] = e;
      visit(index + 1, remaining - e);
    }
  };
  visit(0, k);
  return count;
}

Poly fat_point_defect_density(std::int64_t q) {
  require(q >= 1, ErrorKind::precondition, "fat point defect: q must be >= 1");
  return Poly::monomial(Rat(q, 2), 2);
}

}  // namespace jetcert

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

#include "jetcert/discrete_budget.hpp"

#include "jetcert/error.hpp"
#include "jetcert/jet_counts.hpp"

namespace jetcert {

namespace {

std::int64_t to_int64(const BigInt& v) {
  require(v.fits_slong_p(), ErrorKind::resource, "level index does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

std::vector<BigInt> discrete_jet_bounds(const Candidate& c, CountingMode mode, std::int64_t n,
                                        const ProfileOptions& options) {
  require(n >= 1, ErrorKind::precondition, "discrete budget: n must be >= 1");
  // Surfaces admissibility errors exactly as the profile builder does.
  (void)build_profile(c, mode, options);

  const Rat scale(n);
  const Rat n_alpha1 = scale * c.ratio();
  const Rat n_alpha3 = Rat(2) * n_alpha1;
  const std::int64_t k1 = to_int64(n_alpha1.floor());
  const std::int64_t k3 = to_int64(n_alpha3.floor());
  const std::int64_t k_end = to_int64((Rat(3) * n_alpha1).floor());
  std::int64_t k2 = k3;
  if (mode == CountingMode::large_q) {
    k2 = to_int64((scale * critical_numbers(c, options).alpha2).floor());
  }

  // Bound at level s on the front range 0 <= s <= k3.
  const auto front = [&](std::int64_t s) -> BigInt {
    const BigInt all = jet_space_dim(3, s);
    if (s <= k1) return all;
    if (mode == CountingMode::small_q) {
      // Vanishing to order ceil(s - n*alpha1 - 1) at the tangent direction.
      BigInt order = (Rat(s) - n_alpha1 - Rat(1)).ceil();
      if (order < 0 || options.drop_defects) order = 0;
      return point_jet_dim(3, s, to_int64(order));
    }
    const std::int64_t level = s <= k2 ? s : k2;  // est3 freezes the est2 bound at floor(n*alpha2)
    const BigInt full = jet_space_dim(3, level);
    if (options.drop_defects) return full;
    const BigInt r = ((Rat(level) - n_alpha1) / Rat(options.halving)).floor();
    const BigInt defect = BigInt(static_cast<long>(c.q())) * binomial(to_int64(r) + 1, 2);
    const BigInt bound = full - defect;
    return bound < 0 ? BigInt(0) : bound;
  };

  std::vector<BigInt> bounds;
  bounds.reserve(static_cast<std::size_t>(k_end + 1));
  for (std::int64_t k = 0; k <= k_end; ++k) {
    if (k <= k3) {
      bounds.push_back(front(k));
      continue;
    }
    // Split off the swept surface (multiplicity >= mu along the curve, order
    // >= ceil(k - n*alpha3) along the surface); the rest has multiplicity
    // k - mu*ceil(k - n*alpha3) at the point.
    const std::int64_t along = to_int64((Rat(k) - n_alpha3).ceil());
    const std::int64_t residual = k - options.mu * along;
    bounds.push_back(residual < 0 ? BigInt(0) : front(residual));
  }
  return bounds;
}

DiscreteSumReport discrete_budget_sum(const Candidate& c, CountingMode mode, std::int64_t n,
                                      const ProfileOptions& options) {
  const std::vector<BigInt> bounds = discrete_jet_bounds(c, mode, n, options);
  BigInt sum = 0;
  for (const BigInt& b : bounds) sum += b;

  DiscreteSumReport report{c, mode, n, {}, {}, {}, {}};
  const BigInt n_big(static_cast<long>(n));
  report.exact_sum = Rat(sum, n_big * n_big * n_big);
  report.integral = total_budget(build_profile(c, mode, options));
  report.gap = (report.exact_sum - report.integral).abs();
  report.notes = {
      "breakpoints n*alpha_i rounded down when not integral",
      "o(k^2) correction in the est2 bound taken as zero",
  };
  if (mode == CountingMode::large_q) {
    report.notes.emplace_back(
        "est3 plateau uses the est2 bound frozen at floor(n*alpha2); the fixed twist r is dropped");
  }
  return report;
}

}  // namespace jetcert

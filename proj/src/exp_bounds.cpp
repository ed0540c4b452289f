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

#include "jetcert/exp_bounds.hpp"

#include "jetcert/error.hpp"

namespace jetcert {

ExpBound exp_bounds(const Rat& x, unsigned terms) {
  require(terms >= 1, ErrorKind::precondition, "exp_bounds: terms must be positive");
  require(x.abs() <= Rat(1), ErrorKind::out_of_range,
          "exp_bounds: |x| must be at most 1, got " + x.str());

  if (x.sign() < 0) {
    const ExpBound mirror = exp_bounds(-x, terms);
    return {x, mirror.upper.reciprocal(), mirror.lower.reciprocal(), terms};
  }

  // For 0 <= x <= 1 every Taylor term is non-negative, so the partial sum is
  // a lower bound; e^xi <= e < 3 bounds the Lagrange remainder.
  Rat partial;
  Rat term(1);
  for (unsigned i = 0; i < terms; ++i) {
    partial += term;
    term *= x / Rat(static_cast<std::int64_t>(i + 1));
  }
  // `term` is now x^terms / terms!.
  return {x, partial, partial + Rat(3) * term, terms};
}

}  // namespace jetcert

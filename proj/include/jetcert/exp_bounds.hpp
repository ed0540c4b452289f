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

#ifndef JETCERT_EXP_BOUNDS_HPP
#define JETCERT_EXP_BOUNDS_HPP

#include "jetcert/rational.hpp"

namespace jetcert {

/// Rational enclosure lower <= e^x <= upper.
struct ExpBound {
  Rat x;
  Rat lower;
  Rat upper;
  unsigned terms = 1;

  Rat width() const { return upper - lower; }
  bool contains(const Rat& v) const { return lower <= v && v <= upper; }

  friend bool operator==(const ExpBound&, const ExpBound&) = default;
};

/// Encloses e^x for |x| <= 1 using the first `terms` Taylor terms
/// sum_{i<terms} x^i/i! and the remainder bound 3|x|^terms/terms!.
/// Negative arguments go through the reciprocal of the enclosure of e^{-x}.
ExpBound exp_bounds(const Rat& x, unsigned terms);

}  // namespace jetcert

#endif  // JETCERT_EXP_BOUNDS_HPP

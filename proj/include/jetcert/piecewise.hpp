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

#ifndef JETCERT_PIECEWISE_HPP
#define JETCERT_PIECEWISE_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "jetcert/poly.hpp"
#include "jetcert/rational.hpp"

namespace jetcert {

/// Which estimate produced a piece of a jet-density profile.
enum class Provenance { est1, est2, est3, est4, f3, custom };

std::string_view to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view s);

/// A non-negative piecewise-polynomial density on [b_0, b_m].
///
/// Piece i (0-based) lives on the half-open interval (b_i, b_{i+1}]; piece 0
/// also owns the left endpoint b_0. Construction validates the shape and that
/// each piece is non-negative at both ends of its interval.
class PiecewiseDensity {
 public:
  PiecewiseDensity(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                   std::vector<Provenance> provenance);

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const std::vector<Provenance>& provenance() const { return provenance_; }
  std::size_t size() const { return pieces_.size(); }

  const Rat& lower() const { return breakpoints_.front(); }
  const Rat& upper() const { return breakpoints_.back(); }

  /// Index of the piece owning t under the half-open convention.
  std::size_t piece_index(const Rat& t) const;
  Rat operator()(const Rat& t) const;

  /// Pointwise sum of two densities on the same breakpoint grid.
  PiecewiseDensity operator+(const PiecewiseDensity& rhs) const;

  friend bool operator==(const PiecewiseDensity&, const PiecewiseDensity&) = default;

 private:
  std::vector<Rat> breakpoints_;
  std::vector<Poly> pieces_;
  std::vector<Provenance> provenance_;
};

/// Exact integral of g over [a, b], summed piece by piece.
Rat piecewise_integrate(const PiecewiseDensity& g, const Rat& a, const Rat& b);

/// Integral over the pieces whose provenance matches `which`.
Rat integrate_provenance(const PiecewiseDensity& g, Provenance which);

}  // namespace jetcert

#endif  // JETCERT_PIECEWISE_HPP

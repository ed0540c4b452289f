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

#include "jetcert/piecewise.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "jetcert/error.hpp"

namespace jetcert {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 6> kProvenanceNames{{
    {Provenance::est1, "EST1"},
    {Provenance::est2, "EST2"},
    {Provenance::est3, "EST3"},
    {Provenance::est4, "EST4"},
    {Provenance::f3, "F3"},
    {Provenance::custom, "CUSTOM"},
}};

}  // namespace

std::string_view to_string(Provenance p) {
  for (const auto& [value, name] : kProvenanceNames) {
    if (value == p) return name;
  }
  return "CUSTOM";
}

std::optional<Provenance> provenance_from_string(std::string_view s) {
  for (const auto& [value, name] : kProvenanceNames) {
    if (name == s) return value;
  }
  return std::nullopt;
}

PiecewiseDensity::PiecewiseDensity(std::vector<Rat> breakpoints, std::vector<Poly> pieces,
                                   std::vector<Provenance> provenance)
    : breakpoints_(std::move(breakpoints)),
      pieces_(std::move(pieces)),
      provenance_(std::move(provenance)) {
  require(breakpoints_.size() >= 2, ErrorKind::invalid_profile,
          "piecewise density needs at least two breakpoints");
  require(pieces_.size() + 1 == breakpoints_.size(), ErrorKind::invalid_profile,
          "piece count must be breakpoint count minus one");
  require(provenance_.size() == pieces_.size(), ErrorKind::invalid_profile,
          "one provenance label per piece");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Rat& lo = breakpoints_[i];
    const Rat& hi = breakpoints_[i + 1];
    require(lo < hi, ErrorKind::invalid_profile,
            "breakpoints must be strictly increasing (" + lo.str() + " >= " + hi.str() + ")");
    require(pieces_[i](lo).sign() >= 0 && pieces_[i](hi).sign() >= 0, ErrorKind::invalid_profile,
            "piece " + std::to_string(i) + " is negative at an endpoint of (" + lo.str() + ", " +
                hi.str() + "]");
  }
}

std::size_t PiecewiseDensity::piece_index(const Rat& t) const {
  require(lower() <= t && t <= upper(), ErrorKind::domain,
          "t = " + t.str() + " outside [" + lower().str() + ", " + upper().str() + "]");
  // First breakpoint >= t closes the owning interval.
  const auto it = std::lower_bound(breakpoints_.begin() + 1, breakpoints_.end(), t);
  return static_cast<std::size_t>(it - (breakpoints_.begin() + 1));
}

Rat PiecewiseDensity::operator()(const Rat& t) const { return pieces_[piece_index(t)](t); }

PiecewiseDensity PiecewiseDensity::operator+(const PiecewiseDensity& rhs) const {
  require(breakpoints_ == rhs.breakpoints_, ErrorKind::precondition,
          "density sum requires a common breakpoint grid");
  std::vector<Poly> sum(pieces_.size());
  std::vector<Provenance> prov(pieces_.size());
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    sum[i] = pieces_[i] + rhs.pieces_[i];
    prov[i] = provenance_[i] == rhs.provenance_[i] ? provenance_[i] : Provenance::custom;
  }
  return PiecewiseDensity(breakpoints_, std::move(sum), std::move(prov));
}

Rat piecewise_integrate(const PiecewiseDensity& g, const Rat& a, const Rat& b) {
  require(g.lower() <= a && a <= b && b <= g.upper(), ErrorKind::domain,
          "integration range [" + a.str() + ", " + b.str() + "] not inside [" + g.lower().str() +
              ", " + g.upper().str() + "]");
  Rat total;
  const auto& bp = g.breakpoints();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Rat lo = max(a, bp[i]);
    const Rat hi = min(b, bp[i + 1]);
    if (lo < hi) total += poly_integrate(g.pieces()[i], lo, hi);
  }
  return total;
}

Rat integrate_provenance(const PiecewiseDensity& g, Provenance which) {
  Rat total;
  const auto& bp = g.breakpoints();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.provenance()[i] == which) total += poly_integrate(g.pieces()[i], bp[i], bp[i + 1]);
  }
  return total;
}

}  // namespace jetcert

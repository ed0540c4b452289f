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

#include "jetcert/poly.hpp"

#include <algorithm>

#include "jetcert/error.hpp"

namespace jetcert {

Poly::Poly(std::vector<Rat> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly({c}); }

Poly Poly::monomial(const Rat& c, unsigned power) {
  std::vector<Rat> coeffs(power + 1);
  coeffs[power] = c;
  return Poly(std::move(coeffs));
}

Poly Poly::identity() { return monomial(1, 1); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rat Poly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

Rat Poly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat Poly::operator()(const Rat& t) const {
  // Horner.
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rat(static_cast<std::int64_t>(i));
  }
  return Poly(std::move(out));
}

Poly Poly::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rat> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rat(static_cast<std::int64_t>(i + 1));
  }
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rat mag = c.abs();
    const bool unit = mag == Rat(1);
    if (i == 0 || !unit) out += mag.str();
    if (i > 0) {
      if (!unit) out += "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Rat poly_eval(const Poly& p, const Rat& t) { return p(t); }

Rat poly_integrate(const Poly& p, const Rat& a, const Rat& b) {
  require(a <= b, ErrorKind::precondition,
          "poly_integrate: lower limit " + a.str() + " exceeds upper limit " + b.str());
  const Poly anti = p.antiderivative();
  return anti(b) - anti(a);
}

Poly affine_compose(const Poly& p, const Rat& scale, const Rat& shift) {
  // Horner in the polynomial ring: Q = (...(c_n * u + c_{n-1}) * u + ...) with u = scale*t + shift.
  const Poly inner({shift, scale});
  Poly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

ArgMax quadratic_argmax_on_interval(const Poly& p, const Rat& a, const Rat& b) {
  require(p.degree() <= 2, ErrorKind::unsupported_degree,
          "quadratic_argmax_on_interval: degree " + std::to_string(p.degree()) + " > 2");
  require(a <= b, ErrorKind::precondition, "quadratic_argmax_on_interval: empty interval");

  ArgMax best{a, p(a)};
  const Rat at_b = p(b);
  if (at_b > best.max) best = {b, at_b};

  if (p.degree() == 2 && p.leading().sign() < 0) {
    const Rat vertex = -p.coefficient(1) / (Rat(2) * p.coefficient(2));
    if (a <= vertex && vertex <= b) {
      const Rat at_vertex = p(vertex);
      // Strict concavity makes the vertex the unique maximizer.
      if (at_vertex >= best.max) best = {vertex, at_vertex};
    }
  }
  return best;
}

}  // namespace jetcert

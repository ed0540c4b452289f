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

#ifndef JETCERT_POLY_HPP
#define JETCERT_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "jetcert/rational.hpp"

namespace jetcert {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coefficients);
  Poly(std::initializer_list<Rat> coefficients);

  static Poly constant(const Rat& c);
  /// c * t^power
  static Poly monomial(const Rat& c, unsigned power);
  /// The identity polynomial t.
  static Poly identity();

  const std::vector<Rat>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^i (zero past the degree).
  Rat coefficient(std::size_t i) const;
  Rat leading() const;

  Rat operator()(const Rat& t) const;

  Poly derivative() const;
  /// Antiderivative with zero constant term.
  Poly antiderivative() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rat& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;

  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form such as "1/2*t^2 - 3/7*t".
  std::string str() const;

 private:
  void trim();

  std::vector<Rat> coeffs_;
};

/// Sum of c_i t^i at t.
Rat poly_eval(const Poly& p, const Rat& t);

/// Exact integral of p over [a, b]; requires a <= b.
Rat poly_integrate(const Poly& p, const Rat& a, const Rat& b);

/// Q(t) = P(scale * t + shift), expanded.
Poly affine_compose(const Poly& p, const Rat& scale, const Rat& shift);

struct ArgMax {
  Rat argmax;
  Rat max;
};

/// Exact maximizer of a polynomial of degree <= 2 over [a, b]. Ties go to the
/// smaller argument.
ArgMax quadratic_argmax_on_interval(const Poly& p, const Rat& a, const Rat& b);

}  // namespace jetcert

#endif  // JETCERT_POLY_HPP

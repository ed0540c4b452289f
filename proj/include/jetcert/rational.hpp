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

#ifndef JETCERT_RATIONAL_HPP
#define JETCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace jetcert {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Binomial coefficient C(n, k); zero when k < 0 or k > n, with n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Backed by GMP's mpq_t. Every constructor canonicalizes, and GMP keeps the
/// result of each arithmetic operation canonical, so two equal values always
/// have identical numerator/denominator pairs.
class Rat {
 public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(const BigInt& value);
  Rat(const BigInt& num, const BigInt& den);

  /// Parses "a", "-a" or "a/b" with decimal integers.
  static Rat parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer <= *this.
  BigInt floor() const;
  /// Smallest integer >= *this.
  BigInt ceil() const;

  Rat abs() const;
  Rat reciprocal() const;
  Rat pow(unsigned exponent) const;

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;
  /// Decimal rendering rounded to `digits` fractional digits (display only).
  std::string decimal(int digits = 12) const;
  double to_double() const { return value_.get_d(); }

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  Rat operator-() const;

  friend bool operator==(const Rat& lhs, const Rat& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  explicit Rat(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

}  // namespace jetcert

#endif  // JETCERT_RATIONAL_HPP

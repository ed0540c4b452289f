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

#include "jetcert/rational.hpp"

#include <ostream>

#include "jetcert/error.hpp"

namespace jetcert {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt binomial(std::int64_t n, std::int64_t k) {
  require(n >= 0, ErrorKind::precondition, "binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

namespace {

mpq_class make_canonical(const BigInt& num, const BigInt& den) {
  require(den != 0, ErrorKind::domain, "rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  require(!digits.empty(), ErrorKind::parse, "empty integer literal");
  for (char c : digits) {
    require(c >= '0' && c <= '9', ErrorKind::parse,
            "invalid integer literal '" + std::string(text) + "'");
  }
  std::string owned(text);
  if (owned.front() == '+') owned.erase(0, 1);
  return BigInt(owned, 10);
}

}  // namespace

Rat::Rat(std::int64_t value) : value_(make_canonical(BigInt(static_cast<long>(value)), 1)) {}

Rat::Rat(std::int64_t num, std::int64_t den)
    : value_(make_canonical(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)))) {}

Rat::Rat(const BigInt& value) : value_(make_canonical(value, 1)) {}

Rat::Rat(const BigInt& num, const BigInt& den) : value_(make_canonical(num, den)) {}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  return Rat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigInt Rat::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

BigInt Rat::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return out;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::reciprocal() const {
  require(!is_zero(), ErrorKind::domain, "reciprocal of zero");
  return Rat(den(), num());
}

Rat Rat::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return to_string(num());
  return to_string(num()) + "/" + to_string(den());
}

std::string Rat::decimal(int digits) const {
  // Round half away from zero at the requested precision.
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rat scaled = abs() * Rat(scale);
  BigInt rounded = (scaled + Rat(1, 2)).floor();
  std::string body = to_string(rounded);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0 && rounded != 0) body.insert(0, "-");
  return body;
}

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  require(!rhs.is_zero(), ErrorKind::domain, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace jetcert

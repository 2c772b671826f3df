// Copyright 2026 The cubenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cubenet/errors.hpp"

namespace cubenet {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form is maintained at all times: the denominator is strictly
/// positive, gcd(|num|, den) == 1, and zero is 0/1. Equality and ordering
/// are exact; nothing in this class touches floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}       // NOLINT(runtime/explicit)
  Rational(const BigInt& n) : num_(n), den_(1) {}   // NOLINT(runtime/explicit)
  Rational(BigInt num, BigInt den);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q" with the canonical numerator sign, e.g. "1/2", "-3/4", "0/1".
  std::string str() const;

  /// Accepts "p/q" or a bare integer "p".
  static Rational parse(const std::string& text);

  /// Nearest double; only for display and statistics, never for logic.
  double to_double() const;

  /// Exact value of a double (every finite double is a dyadic rational).
  static Rational from_double(double value);

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Builds n/d in canonical form. Throws ValidationError when d == 0.
Rational make_rational(const BigInt& n, const BigInt& d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace cubenet

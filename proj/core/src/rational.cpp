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

#include "cubenet/rational.hpp"

#include <cmath>
#include <ostream>

namespace cubenet {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw ValidationError("rational denominator must be nonzero");
  }
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r(*this);
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) {
    throw ValidationError("rational division by zero");
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) {
    throw ValidationError("empty rational literal");
  }
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text), BigInt(1));
    }
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::runtime_error& e) {
    throw ValidationError("bad rational literal '" + text + "': " + e.what());
  }
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw ValidationError("cannot convert non-finite double to rational");
  }
  if (value == 0.0) return Rational();
  int exp = 0;
  double mant = std::frexp(value, &exp);  // value = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  BigInt num(static_cast<long long>(std::ldexp(mant, 53)));
  exp -= 53;
  if (exp >= 0) {
    return Rational(num << exp, BigInt(1));
  }
  return Rational(num, BigInt(1) << -exp);
}

Rational make_rational(const BigInt& n, const BigInt& d) {
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace cubenet

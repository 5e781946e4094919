/*
   Copyright 2026 The osp21 Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "osp21/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace osp21 {

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = from_wide(n, d);
}

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) {
    throw std::overflow_error("Rational: int64 overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    return *this = from_wide(static_cast<__int128>(num_) + o.num_, 1);
  }
  return *this = from_wide(static_cast<__int128>(num_) * o.den_ +
                               static_cast<__int128>(o.num_) * den_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<__int128>(num_) * o.num_,
                           static_cast<__int128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  return *this = from_wide(static_cast<__int128>(num_) * o.den_,
                           static_cast<__int128>(den_) * o.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string to_string(const Rational& r) {
  if (r.is_integer()) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Rational parse_rational(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
      const long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rational(n);
    }
    const std::string a = text.substr(0, slash);
    const std::string b = text.substr(slash + 1);
    const long long n = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const long long d = std::stoll(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << to_string(r);
}

}  // namespace osp21

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

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Core>

namespace osp21 {

/// Exact rational number with int64 numerator/denominator.
///
/// Always normalized (gcd-reduced, positive denominator). Every operation is
/// overflow-checked and throws std::overflow_error rather than wrapping, so an
/// exact computation either stays exact or fails loudly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: integer literals promote implicitly
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);
  Rational operator-() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 n, __int128 d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }
inline double to_double(const Rational& r) {
  return static_cast<double>(r.num()) / static_cast<double>(r.den());
}
inline double to_double(double x) { return x; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace osp21

namespace Eigen {

template <>
struct NumTraits<osp21::Rational> : GenericNumTraits<osp21::Rational> {
  using Real = osp21::Rational;
  using NonInteger = osp21::Rational;
  using Literal = osp21::Rational;
  using Nested = osp21::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 4
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static Real highest() { return Real(INT64_MAX); }
  static Real lowest() { return Real(-INT64_MAX); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

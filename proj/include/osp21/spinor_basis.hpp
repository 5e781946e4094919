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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace osp21 {

/// Spinor components. Upper is the fermion-occupied level (sigma_0 = +1).
enum class Component { lower = 0, upper = 1 };

struct Monomial {
  Component component = Component::upper;
  int degree = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Two-component monomial basis {x^0..x^du} (upper) + {x^0..x^dl} (lower) for
/// a fixed a2+a2 = j sector. Upper monomials come first.
class SpinorBasis {
 public:
  SpinorBasis(int j, int upper_degree, int lower_degree);

  int j() const { return j_; }
  int upper_degree() const { return upper_degree_; }
  int lower_degree() const { return lower_degree_; }
  Eigen::Index dim() const { return upper_degree_ + lower_degree_ + 2; }

  std::optional<Eigen::Index> find(const Monomial& m) const;
  Monomial monomial(Eigen::Index i) const;

  /// Shape label of the degree pair, e.g. "P(n+1,n)" when du = dl + 1.
  std::string family() const;

  friend bool operator==(const SpinorBasis&, const SpinorBasis&) = default;

 private:
  int j_;
  int upper_degree_;
  int lower_degree_;
};

/// Coefficient lists of a two-component polynomial, lowest degree first.
struct PolySpinor {
  std::vector<double> upper;
  std::vector<double> lower;

  Eigen::VectorXd to_vector(const SpinorBasis& basis) const;
  static PolySpinor from_vector(const SpinorBasis& basis, const Eigen::VectorXd& v);
};

}  // namespace osp21

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

#include "osp21/spinor_basis.hpp"

#include <stdexcept>

namespace osp21 {

SpinorBasis::SpinorBasis(int j, int upper_degree, int lower_degree)
    : j_(j), upper_degree_(upper_degree), lower_degree_(lower_degree) {
  if (upper_degree < 0 || lower_degree < 0) {
    throw std::invalid_argument("SpinorBasis: degrees must be non-negative");
  }
}

std::optional<Eigen::Index> SpinorBasis::find(const Monomial& m) const {
  if (m.degree < 0) return std::nullopt;
  if (m.component == Component::upper) {
    if (m.degree > upper_degree_) return std::nullopt;
    return m.degree;
  }
  if (m.degree > lower_degree_) return std::nullopt;
  return upper_degree_ + 1 + m.degree;
}

Monomial SpinorBasis::monomial(Eigen::Index i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("SpinorBasis: index out of range");
  if (i <= upper_degree_) return {Component::upper, static_cast<int>(i)};
  return {Component::lower, static_cast<int>(i - upper_degree_ - 1)};
}

std::string SpinorBasis::family() const {
  const int d = upper_degree_ - lower_degree_;
  if (d == 0) return "P(n,n)";
  if (d == 1) return "P(n+1,n)";
  if (d == -1) return "P(n,n+1)";
  return "P(" + std::to_string(upper_degree_) + "," + std::to_string(lower_degree_) + ")";
}

Eigen::VectorXd PolySpinor::to_vector(const SpinorBasis& basis) const {
  if (upper.size() != static_cast<std::size_t>(basis.upper_degree() + 1) ||
      lower.size() != static_cast<std::size_t>(basis.lower_degree() + 1)) {
    throw std::invalid_argument("PolySpinor: coefficient lengths do not match basis");
  }
  Eigen::VectorXd v(basis.dim());
  for (std::size_t k = 0; k < upper.size(); ++k) v(static_cast<Eigen::Index>(k)) = upper[k];
  for (std::size_t k = 0; k < lower.size(); ++k) {
    v(basis.upper_degree() + 1 + static_cast<Eigen::Index>(k)) = lower[k];
  }
  return v;
}

PolySpinor PolySpinor::from_vector(const SpinorBasis& basis, const Eigen::VectorXd& v) {
  if (v.size() != basis.dim()) throw std::invalid_argument("PolySpinor: vector size mismatch");
  PolySpinor p;
  p.upper.assign(v.data(), v.data() + basis.upper_degree() + 1);
  p.lower.assign(v.data() + basis.upper_degree() + 1, v.data() + v.size());
  return p;
}

}  // namespace osp21

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

#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "osp21/fock_space.hpp"
#include "osp21/rational.hpp"
#include "osp21/spinor_basis.hpp"

namespace osp21 {

/// Basis an operator acts on.
using Domain = std::variant<FockSpace, SpinorBasis>;

inline Eigen::Index domain_dim(const Domain& d) {
  return std::visit([](const auto& b) { return b.dim(); }, d);
}

std::string describe(const Domain& d);

enum class ScalarKind { exact_integer, exact_rational, complex_float };

std::string to_string(ScalarKind k);

class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse matrix over a finite basis.
///
/// Scalar is double for Fock-space operators and Rational for the exact
/// polynomial realizations. There are no implicit conversions between the two;
/// use cast_to_double() to promote.
template <typename Scalar>
class Operator {
 public:
  using SparseMatrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;
  using Triplet = Eigen::Triplet<Scalar>;

  explicit Operator(Domain domain)
      : domain_(std::move(domain)), m_(domain_dim(domain_), domain_dim(domain_)) {}

  Operator(Domain domain, SparseMatrix m) : domain_(std::move(domain)), m_(std::move(m)) {
    const auto n = domain_dim(domain_);
    if (m_.rows() != n || m_.cols() != n) {
      throw DomainMismatch("Operator: matrix shape does not match domain " + describe(domain_));
    }
    m_.makeCompressed();
  }

  /// Duplicate triplets are summed.
  static Operator from_triplets(Domain domain, const std::vector<Triplet>& triplets) {
    const auto n = domain_dim(domain);
    SparseMatrix m(n, n);
    for (const auto& t : triplets) {
      if (t.row() < 0 || t.row() >= n || t.col() < 0 || t.col() >= n) {
        throw std::out_of_range("Operator: triplet outside domain");
      }
    }
    m.setFromTriplets(triplets.begin(), triplets.end());
    return Operator(std::move(domain), std::move(m));
  }

  static Operator identity(Domain domain) {
    const auto n = domain_dim(domain);
    std::vector<Triplet> t;
    t.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) t.emplace_back(i, i, Scalar(1));
    return from_triplets(std::move(domain), t);
  }

  const Domain& domain() const { return domain_; }
  const SparseMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }
  Scalar coeff(Eigen::Index r, Eigen::Index c) const { return m_.coeff(r, c); }

  /// Nonzero entries in column-major order, explicit zeros skipped.
  std::vector<Triplet> triplets() const {
    std::vector<Triplet> out;
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
      for (typename SparseMatrix::InnerIterator it(m_, k); it; ++it) {
        if (it.value() != Scalar(0)) out.emplace_back(it.row(), it.col(), it.value());
      }
    }
    return out;
  }

  ScalarKind scalar_kind() const {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      for (const auto& t : triplets()) {
        if (!t.value().is_integer()) return ScalarKind::exact_rational;
      }
      return ScalarKind::exact_integer;
    } else {
      return ScalarKind::complex_float;
    }
  }

  /// Copy with stored zeros removed.
  Operator pruned() const { return from_triplets(domain_, triplets()); }

  Eigen::MatrixXd to_dense() const {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(dim(), dim());
    for (Eigen::Index k = 0; k < m_.outerSize(); ++k) {
      for (typename SparseMatrix::InnerIterator it(m_, k); it; ++it) {
        d(it.row(), it.col()) = to_double(it.value());
      }
    }
    return d;
  }

 private:
  Domain domain_;
  SparseMatrix m_;
};

namespace detail {

template <typename Scalar>
void require_same_domain(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainMismatch("operators act on different domains: " + describe(a.domain()) +
                         " vs " + describe(b.domain()));
  }
}

template <typename Scalar>
double abs_value(const Scalar& x) {
  using std::abs;
  return to_double(abs(x));
}

}  // namespace detail

template <typename Scalar>
Operator<Scalar> operator+(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  detail::require_same_domain(a, b);
  return Operator<Scalar>(a.domain(), a.matrix() + b.matrix());
}

template <typename Scalar>
Operator<Scalar> operator-(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  detail::require_same_domain(a, b);
  return Operator<Scalar>(a.domain(), a.matrix() - b.matrix());
}

template <typename Scalar>
Operator<Scalar> operator-(const Operator<Scalar>& a) {
  return Operator<Scalar>(a.domain(), -a.matrix());
}

template <typename Scalar>
Operator<Scalar> operator*(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  detail::require_same_domain(a, b);
  return Operator<Scalar>(a.domain(), a.matrix() * b.matrix());
}

template <typename Scalar>
Operator<Scalar> operator*(const Scalar& c, const Operator<Scalar>& a) {
  return Operator<Scalar>(a.domain(), a.matrix() * c);
}

/// AB - BA.
template <typename Scalar>
Operator<Scalar> commutator(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  return a * b - b * a;
}

/// AB + BA.
template <typename Scalar>
Operator<Scalar> anticommutator(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  return a * b + b * a;
}

template <typename Scalar>
Operator<Scalar> transpose(const Operator<Scalar>& a) {
  return Operator<Scalar>(a.domain(), typename Operator<Scalar>::SparseMatrix(a.matrix().transpose()));
}

inline Operator<double> cast_to_double(const Operator<Rational>& a) {
  std::vector<Eigen::Triplet<double>> t;
  for (const auto& e : a.triplets()) t.emplace_back(e.row(), e.col(), to_double(e.value()));
  return Operator<double>::from_triplets(a.domain(), t);
}

inline Operator<double> cast_to_double(const Operator<double>& a) { return a; }

/// max |entry| over the columns selected by mask (all columns if mask is empty).
template <typename Scalar>
double max_abs(const Operator<Scalar>& a, const std::vector<bool>& columns = {}) {
  double m = 0.0;
  const auto& mat = a.matrix();
  for (Eigen::Index k = 0; k < mat.outerSize(); ++k) {
    if (!columns.empty() && !columns[static_cast<std::size_t>(k)]) continue;
    for (typename Operator<Scalar>::SparseMatrix::InnerIterator it(mat, k); it; ++it) {
      m = std::max(m, detail::abs_value(it.value()));
    }
  }
  return m;
}

/// Exact structural and value equality (stored zeros ignored).
template <typename Scalar>
bool exactly_equal(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  if (!(a.domain() == b.domain())) return false;
  const auto d = (a - b).triplets();
  return d.empty();
}

/// True if no nonzero entry is stored.
template <typename Scalar>
bool is_zero(const Operator<Scalar>& a) {
  return a.triplets().empty();
}

}  // namespace osp21

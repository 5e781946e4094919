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

#include <doctest.h>

#include <functional>

#include "osp21/ladder.hpp"
#include "osp21/transform.hpp"

using namespace osp21;

namespace {

const TransformTag kSp{Metric::S, 1};
const TransformTag kSm{Metric::S, -1};
const TransformTag kTp{Metric::T, 1};
const TransformTag kTm{Metric::T, -1};

Rational at(const Operator<Rational>& op, const SpinorBasis& b, Monomial row, Monomial col) {
  return op.coeff(*b.find(row), *b.find(col));
}

}  // namespace

TEST_CASE("basis families per tag") {
  CHECK(basis_for(kSp, 3).upper_degree() == 2);
  CHECK(basis_for(kSp, 3).lower_degree() == 3);
  CHECK(basis_for(kSm, 3).upper_degree() == 4);
  CHECK(basis_for(kSm, 3).lower_degree() == 3);
  CHECK(basis_for(kTp, 3).family() == "P(n+1,n)");
  CHECK(basis_for(kTm, 3).family() == "P(n,n+1)");
  CHECK_THROWS_AS(basis_for(kTm, 0), std::invalid_argument);
}

TEST_CASE("s+1 generators against hand-applied differential operators") {
  for (int j = 1; j <= 5; ++j) {
    const auto g = build_transformed_generators(j, kSp);
    const auto b = basis_for(kSp, j);
    const Component up = Component::upper, lo = Component::lower;
    // J-' = d/dx on both components
    for (int k = 1; k <= j; ++k) {
      CHECK(at(g.Jm, b, {lo, k - 1}, {lo, k}) == Rational(k));
      if (k <= j - 1) CHECK(at(g.Jm, b, {up, k - 1}, {up, k}) == Rational(k));
    }
    // J+' = -x^2 d + x (j - s): upper (s=1) x^k -> (j-1-k) x^{k+1}, lower x^k -> (j-k) x^{k+1}
    for (int k = 0; k + 1 <= j; ++k) {
      CHECK(at(g.Jp, b, {lo, k + 1}, {lo, k}) == Rational(j - k));
      if (k + 1 <= j - 1) CHECK(at(g.Jp, b, {up, k + 1}, {up, k}) == Rational(j - 1 - k));
    }
    // J0' = (2 x d - j + s)/2
    for (int k = 0; k <= j; ++k) CHECK(at(g.J0, b, {lo, k}, {lo, k}) == Rational(2 * k - j, 2));
    // V+' = sigma_+ (j - x d) kills the top lower monomial
    for (Eigen::Index r = 0; r < b.dim(); ++r) CHECK(g.Vp.coeff(r, *b.find({lo, j})) == Rational(0));
    // W-' = sigma_-: upper x^k -> lower x^k
    for (int k = 0; k <= j - 1; ++k) CHECK(at(g.Wm, b, {lo, k}, {up, k}) == Rational(1));
  }
}

TEST_CASE("transformed tables close exactly for every tag, j = 1..8") {
  for (const auto& tag : kAllTags) {
    for (int j = 1; j <= 8; ++j) {
      CAPTURE(to_string(tag));
      CAPTURE(j);
      const auto rep = verify_transformed_algebra(j, tag);
      CHECK(rep.exact);
      CHECK(rep.passed());
      CHECK(rep.max_residual() == 0.0);
    }
  }
  const auto g = build_transformed_generators(4, kSp);
  CHECK(is_zero(anticommutator(g.Wm, g.Wm)));
  CHECK(exactly_equal(anticommutator(g.Vp, g.Wm), g.J - g.J0));
}

TEST_CASE("half-integer entries make the transformed sets exact-rational") {
  const auto g = build_transformed_generators(3, kSp);
  CHECK(g.J0.scalar_kind() == ScalarKind::exact_rational);
  CHECK(g.Jp.scalar_kind() == ScalarKind::exact_integer);
}

TEST_CASE("S bases are invariant subspaces, T bases are invariant quotients") {
  for (int j = 1; j <= 6; ++j) {
    CHECK(check_basis_invariance(kSp, j).subspace_invariant());
    CHECK(check_basis_invariance(kSm, j).subspace_invariant());
    CHECK(check_basis_invariance(kTp, j).quotient_invariant());
    CHECK(check_basis_invariance(kTm, j).quotient_invariant());
    CHECK_FALSE(check_basis_invariance(kTp, j).subspace_invariant());
  }
}

TEST_CASE("tabulated primed forms: s+1 matches, the others do not close") {
  for (const auto& d : diff_printed_forms(kSp, 4)) CHECK(d.identical);
  for (const auto& tag : {kSm, kTp, kTm}) {
    CAPTURE(to_string(tag));
    bool any = false;
    for (const auto& d : diff_printed_forms(tag, 4)) any = any || !d.identical;
    CHECK(any);
    CHECK_FALSE(verify_transformed_algebra(4, tag, FormSource::printed).passed());
  }
}

TEST_CASE("metric S on simple states") {
  const FockSpace space(4, 6);
  const auto s = build_metric(space, kSp);
  CHECK(s.matrix.coeff(space.index({0, 0, 0}), space.index({0, 0, 0})) == 1.0);
  CHECK(s.matrix.coeff(space.index({1, 1, 0}), space.index({1, 0, 0})) == 1.0);
  CHECK(s.matrix.coeff(space.index({0, 1, 1}), space.index({0, 0, 1})) == 1.0);
  CHECK(s.status[static_cast<std::size_t>(space.index({4, 5, 1}))] == ColumnStatus::overflow);
  const auto sm = build_metric(space, kSm);
  CHECK(sm.status[static_cast<std::size_t>(space.index({0, 2, 1}))] == ColumnStatus::undefined);
  CHECK_THROWS(build_metric_inverse(space, kSp));
}

TEST_CASE("S intertwining through explicit matrices") {
  const FockSpace space(6, 14);
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto a2d = make_boson(space, Mode::two, Ladder::create);
  const auto sp = make_fermion(space, FermionOp::sigma_plus);
  const auto sm = make_fermion(space, FermionOp::sigma_minus);
  for (int alpha : {1, -1}) {
    CAPTURE(alpha);
    const auto m = build_metric(space, {Metric::S, alpha});
    const auto& S = m.matrix;
    // A column counts when it and every state X sends it to have a defined,
    // non-overflowing metric image that stays clear of the n2 cutoff.
    auto usable = [&](Eigen::Index c, const Operator<double>& x) {
      const auto st = space.state(c);
      if (st.n1 > space.cutoff1() - 2 || st.n2 + st.n1 + 3 > space.cutoff2()) return false;
      if (m.status[static_cast<std::size_t>(c)] != ColumnStatus::ok) return false;
      for (Eigen::Index r = 0; r < space.dim(); ++r) {
        if (x.coeff(r, c) != 0.0 && m.status[static_cast<std::size_t>(r)] != ColumnStatus::ok) return false;
      }
      return true;
    };
    auto check = [&](const Operator<double>& lhs, const Operator<double>& rhs, const Operator<double>& x) {
      int used = 0;
      const Eigen::MatrixXd l = lhs.to_dense(), r = rhs.to_dense();
      for (Eigen::Index c = 0; c < space.dim(); ++c) {
        if (!usable(c, x)) continue;
        ++used;
        CHECK((l.col(c) - r.col(c)).cwiseAbs().maxCoeff() < 1e-10);
      }
      CHECK(used > 20);
    };
    check(S * a1d, a1d * a2d * S, a1d);
    check(S * a2d, a2d * S, a2d);
    check(a2d * S * a1, a1 * S, a1);
    if (alpha == 1) {
      check(S * sp, sp * a2d * S, sp);
      check(a2d * S * sm, sm * S, sm);
    } else {
      check(a2d * S * sp, sp * S, sp);
      check(S * sm, sm * a2d * S, sm);
    }
  }
}

TEST_CASE("state-map intertwining for all tags") {
  const FockSpace space(10, 14);
  for (const auto& tag : kAllTags) {
    CAPTURE(to_string(tag));
    const auto rep = verify_intertwining(space, tag);
    CHECK(rep.passed());
    CHECK(rep.max_residual() < 1e-10);
  }
}

TEST_CASE("j-unfixed forms close on Fock space with j -> N2") {
  const FockSpace space(8, 8);
  for (const auto& tag : kAllTags) {
    CAPTURE(to_string(tag));
    CHECK(verify_unfixed_algebra(space, tag).passed());
  }
}

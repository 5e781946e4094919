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

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "osp21/algebra.hpp"
#include "osp21/gamma.hpp"
#include "osp21/ladder.hpp"

using namespace osp21;

namespace {

// Hand-built dense matrices: mode1 (x) mode2 (x) fermion, fermion index = s.
struct Dense {
  int c1, c2;
  Eigen::MatrixXd a1, a1d, a2, a2d, f, fd, id;

  Dense(int c1_, int c2_) : c1(c1_), c2(c2_) {
    auto lower = [](int c) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(c + 1, c + 1);
      for (int n = 1; n <= c; ++n) m(n - 1, n) = std::sqrt(double(n));
      return m;
    };
    Eigen::Matrix2d f2;
    f2 << 0, 1, 0, 0;  // |s=1> -> |s=0>
    const Eigen::MatrixXd i1 = Eigen::MatrixXd::Identity(c1 + 1, c1 + 1);
    const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(c2 + 1, c2 + 1);
    const Eigen::MatrixXd i0 = Eigen::MatrixXd::Identity(2, 2);
    auto kron3 = [](const Eigen::MatrixXd& x, const Eigen::MatrixXd& y, const Eigen::MatrixXd& z) {
      return Eigen::MatrixXd(Eigen::kroneckerProduct(x, Eigen::MatrixXd(Eigen::kroneckerProduct(y, z))));
    };
    a1 = kron3(lower(c1), i2, i0);
    a1d = a1.transpose();
    a2 = kron3(i1, lower(c2), i0);
    a2d = a2.transpose();
    f = kron3(i1, i2, f2);
    fd = f.transpose();
    id = kron3(i1, i2, i0);
  }
};

double diff(const Operator<double>& op, const Eigen::MatrixXd& m) {
  return (op.to_dense() - m).cwiseAbs().maxCoeff();
}

const RelationResult* find(const AlgebraReport& r, const std::string& id) {
  for (const auto& x : r.relations) {
    if (x.id == id) return &x;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("generators agree with a hand-built Kronecker construction") {
  const FockSpace space(4, 3);
  const Dense d(4, 3);
  const Eigen::MatrixXd n1 = d.a1d * d.a1, n2 = d.a2d * d.a2, ff = d.fd * d.f;
  for (auto kind : {RealizationKind::ferm_a, RealizationKind::ferm_b}) {
    CAPTURE(to_string(kind));
    const auto g = build_generators(space, kind);
    CHECK(diff(g.Jp, d.a1d * d.a2) < 1e-14);
    CHECK(diff(g.Jm, d.a2d * d.a1) < 1e-14);
    CHECK(diff(g.J0, 0.5 * (n1 - n2)) < 1e-14);
    CHECK(diff(g.N, n1 + n2) < 1e-14);
    if (kind == RealizationKind::ferm_a) {
      CHECK(diff(g.Vp, d.fd * d.a2) < 1e-14);
      CHECK(diff(g.Vm, -d.fd * d.a1) < 1e-14);
      CHECK(diff(g.Wp, d.f * d.a1d) < 1e-14);
      CHECK(diff(g.Wm, d.f * d.a2d) < 1e-14);
      CHECK(diff(g.J, 0.5 * (n1 + n2) + ff) < 1e-14);
    } else {
      CHECK(diff(g.Vp, d.f * d.a2) < 1e-14);
      CHECK(diff(g.Vm, -d.f * d.a1) < 1e-14);
      CHECK(diff(g.Wp, d.fd * d.a1d) < 1e-14);
      CHECK(diff(g.Wm, d.fd * d.a2d) < 1e-14);
      CHECK(diff(g.J, 0.5 * (n1 + n2) + d.f * d.fd) < 1e-14);
    }
  }
}

TEST_CASE("single ladder applications") {
  const FockSpace space(3, 3);
  const auto a = build_generators(space, RealizationKind::ferm_a);
  CHECK(a.Vp.coeff(space.index({0, 0, 1}), space.index({0, 1, 0})) == doctest::Approx(1.0));
  const auto b = build_generators(space, RealizationKind::ferm_b);
  // W+ = f+ a1+ : |1,0,0> -> sqrt(2) |2,0,1>
  CHECK(b.Wp.coeff(space.index({2, 0, 1}), space.index({1, 0, 0})) == doctest::Approx(std::sqrt(2.0)));
  CHECK(is_zero(commutator(a.N, a.Jp)));
  CHECK_THROWS(build_generators(FockSpace(1, 4), RealizationKind::ferm_a));
}

TEST_CASE("full relation table for both realizations, cutoffs 4..9") {
  for (int c = 4; c <= 9; ++c) {
    for (auto kind : {RealizationKind::ferm_a, RealizationKind::ferm_b}) {
      CAPTURE(c);
      CAPTURE(to_string(kind));
      const auto rep = verify_algebra(build_generators(FockSpace(c, c), kind), 2);
      CHECK(rep.passed());
      CHECK(rep.max_residual() < 1e-10);
      CHECK(find(rep, "[J+,J-]=2J0") != nullptr);
      CHECK(find(rep, "{V+,W-}=-J0+J") != nullptr);
      CHECK(find(rep, "{f,f+}=1") != nullptr);
    }
  }
}

TEST_CASE("odd self-anticommutators vanish structurally") {
  const auto g = build_generators(FockSpace(5, 5), RealizationKind::ferm_a);
  CHECK(is_zero(anticommutator(g.Vp, g.Vp)));
  CHECK(is_zero(anticommutator(g.Wm, g.Wm)));
}

TEST_CASE("a broken table is reported, not thrown") {
  auto g = build_generators(FockSpace(5, 5), RealizationKind::ferm_a);
  g.J0 = 2.0 * g.J0;
  const auto rep = verify_algebra(g, 2);
  CHECK_FALSE(rep.passed());
  REQUIRE(rep.worst() != nullptr);
  CHECK(rep.worst()->residual > 0.1);
}

TEST_CASE("J of the two realizations differ by 1 - 2 f+f") {
  const FockSpace space(5, 4);
  const auto a = build_generators(space, RealizationKind::ferm_a);
  const auto b = build_generators(space, RealizationKind::ferm_b);
  const auto id = Operator<double>::identity(space);
  CHECK(max_abs(b.J - a.J - (id - 2.0 * make_fermion_number(space))) < 1e-14);
}

TEST_CASE("grading from sparsity patterns") {
  for (auto kind : {RealizationKind::ferm_a, RealizationKind::ferm_b}) {
    const auto g = build_generators(FockSpace(4, 4), kind);
    for (const auto* op : {&g.Jp, &g.Jm, &g.J0, &g.J, &g.N}) CHECK(fermion_parity(*op) == Parity::even);
    for (const auto* op : {&g.Vp, &g.Vm, &g.Wp, &g.Wm}) CHECK(fermion_parity(*op) == Parity::odd);
    CHECK(fermion_parity(Operator<double>(g.Vp * g.Wm)) == Parity::even);
    CHECK(fermion_parity(Operator<double>(g.Jp * g.Wm)) == Parity::odd);
    for (const auto& r : check_grading(g)) CHECK(r.passed);
  }
}

TEST_CASE("Q closure and the fitted [J, odd] coefficients") {
  for (auto kind : {RealizationKind::ferm_a, RealizationKind::ferm_b}) {
    const FockSpace space(7, 7);
    const auto g = build_generators(space, kind);
    const auto rep = verify_qpm_closure(g);
    CHECK(rep.passed());
    const auto* n = find(rep, "[N,Q+]=0");
    REQUIRE(n != nullptr);
    CHECK(n->residual < 1e-10);
    const auto fits = fit_j_odd_coefficients(g, space.interior_mask(2));
    REQUIRE(fits.size() == 4);
    for (const auto& f : fits) {
      CAPTURE(f.relation);
      const bool v = f.relation.find('V') != std::string::npos;
      CHECK(f.coefficient == doctest::Approx(v ? 0.5 : -0.5));
      CHECK(f.residual < 1e-10);
    }
  }
}

TEST_CASE("Gamma state maps") {
  auto g = gamma_action(GammaKind::gamma1, {1, 2, 0});
  CHECK(g.state == FockState{1, 1, 0});
  CHECK(g.amplitude == doctest::Approx(std::sqrt(2.0)));
  g = gamma_action(GammaKind::gamma1, {0, 5, 0});
  CHECK(g.state == FockState{0, 5, 0});
  CHECK(g.amplitude == doctest::Approx(1.0));
  g = gamma_action(GammaKind::gamma1, {3, 2, 0});
  CHECK(g.annihilated);
  g = gamma_action(GammaKind::gamma2, {1, 1, 0});
  CHECK(g.state == FockState{1, 2, 0});
  CHECK(g.amplitude == doctest::Approx(1.0 / std::sqrt(6.0)));
  // large occupations go through log-space
  g = gamma_action(GammaKind::gamma1, {25, 40, 0});
  CHECK(std::log(g.amplitude) ==
        doctest::Approx(0.5 * (std::lgamma(41.0) - std::lgamma(16.0))).epsilon(1e-12));
}

TEST_CASE("Gamma1 equals a dense power of a2; Gamma2 as printed does not match (a2+)^n1") {
  const int m = 6;
  const Dense d(m, m);
  const FockSpace space(m, m);
  for (int n1 = 0; n1 <= m; ++n1) {
    Eigen::MatrixXd lower = Eigen::MatrixXd::Identity(d.id.rows(), d.id.cols());
    Eigen::MatrixXd raise = lower;
    for (int k = 0; k < n1; ++k) {
      lower = d.a2 * lower;
      raise = d.a2d * raise;
    }
    for (int n2 = 0; n1 + n2 <= m; ++n2) {
      const auto col = space.index({n1, n2, 0});
      const auto g1 = gamma_action(GammaKind::gamma1, {n1, n2, 0});
      if (g1.annihilated) {
        CHECK(lower.col(col).cwiseAbs().maxCoeff() == 0.0);
      } else {
        CHECK(lower(space.index(g1.state), col) == doctest::Approx(g1.amplitude).epsilon(1e-12));
      }
      if (n1 + n2 < m) {
        const auto g2 = gamma_action(GammaKind::gamma2, {n1, n2, 0});
        const double truth = raise(space.index({n1, n2 + n1, 0}), col);
        CHECK(g2.state == FockState{n1, n2 + n1, 0});
        if (n1 + n2 > 0) CHECK(std::abs(truth - g2.amplitude) > 1e-3);
      }
    }
  }
  const auto r1 = gamma_report(GammaKind::gamma1, 10);
  CHECK(r1.mismatches() == 0);
  CHECK(r1.rows.size() == 66);
  CHECK(gamma_report(GammaKind::gamma2, 10).mismatches() == 65);
}

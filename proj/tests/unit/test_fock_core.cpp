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
#include <random>

#include "osp21/eigen_dense.hpp"
#include "osp21/ladder.hpp"
#include "osp21/operator.hpp"
#include "osp21/rational.hpp"

using namespace osp21;

TEST_CASE("fock index is lexicographic in (n1, n2, s) and bijective") {
  const FockSpace space(3, 2);
  CHECK(space.dim() == 4 * 3 * 2);
  Eigen::Index expected = 0;
  for (int n1 = 0; n1 <= 3; ++n1) {
    for (int n2 = 0; n2 <= 2; ++n2) {
      for (int s = 0; s <= 1; ++s) {
        const FockState st{n1, n2, s};
        CHECK(space.index(st) == expected);
        CHECK(space.state(expected) == st);
        ++expected;
      }
    }
  }
  CHECK_THROWS_AS(space.index({4, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(FockSpace(-1, 2), std::invalid_argument);
}

TEST_CASE("boson ladder entries") {
  const FockSpace space(4, 4);
  const auto ad = make_boson(space, Mode::one, Ladder::create);
  const auto a = make_boson(space, Mode::one, Ladder::annihilate);
  CHECK(ad.coeff(space.index({3, 0, 0}), space.index({2, 0, 0})) == doctest::Approx(std::sqrt(3.0)));
  CHECK(a.coeff(space.index({2, 1, 1}), space.index({3, 1, 1})) == doctest::Approx(std::sqrt(3.0)));
  // vacuum expectation of a a+
  const auto aad = a * ad;
  CHECK(aad.coeff(space.index({0, 0, 0}), space.index({0, 0, 0})) == doctest::Approx(1.0));
  // creation on the top state is truncated to zero
  const auto top = space.index({4, 2, 0});
  for (Eigen::Index r = 0; r < space.dim(); ++r) CHECK(ad.coeff(r, top) == 0.0);
  // a1+ is the transpose of a1
  CHECK(exactly_equal(ad, transpose(a)));
}

TEST_CASE("boson commutators") {
  const FockSpace space(6, 5);
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto a2 = make_boson(space, Mode::two, Ladder::annihilate);
  const auto a2d = make_boson(space, Mode::two, Ladder::create);
  const auto id = Operator<double>::identity(space);
  CHECK(is_zero(commutator(a1, a2d)));
  CHECK(is_zero(commutator(a1, a2)));
  CHECK(is_zero(commutator(a1d, a2d)));
  const auto mask = space.interior_mask(1);
  CHECK(max_abs(commutator(a1, a1d) - id, mask) < 1e-12);
  CHECK(max_abs(commutator(a2, a2d) - id, mask) < 1e-12);
  // the truncation shows up only at the top
  CHECK(max_abs(commutator(a1, a1d) - id) > 1.0);
  CHECK(is_zero(commutator(a1, a1)));
  CHECK(max_abs(make_number(space, Mode::one) - a1d * a1) < 1e-14);
}

TEST_CASE("fermion matrices") {
  const FockSpace space(2, 2);
  const auto sp = make_fermion(space, FermionOp::sigma_plus);
  const auto sm = make_fermion(space, FermionOp::sigma_minus);
  const auto s0 = make_fermion(space, FermionOp::sigma_zero);
  const auto id = Operator<double>::identity(space);
  CHECK(exactly_equal(anticommutator(sp, sm), id));
  CHECK(is_zero(sp * sp));
  CHECK(is_zero(anticommutator(sp, sp)));
  // sigma_0 = +1 on the occupied component, f = sigma_- empties it
  const auto up = space.index({1, 2, 1});
  const auto down = space.index({1, 2, 0});
  CHECK(s0.coeff(up, up) == 1.0);
  CHECK(s0.coeff(down, down) == -1.0);
  CHECK(sm.coeff(down, up) == 1.0);
  CHECK(exactly_equal(make_fermion_number(space), sp * sm));
  CHECK(exactly_equal(s0, sp * sm - sm * sp));
}

TEST_CASE("domain mismatch is an error") {
  const auto a = make_boson(FockSpace(2, 2), Mode::one, Ladder::create);
  const auto b = make_boson(FockSpace(3, 2), Mode::one, Ladder::create);
  CHECK_THROWS_AS(a * b, DomainMismatch);
  CHECK_THROWS_AS(commutator(a, b), DomainMismatch);
}

TEST_CASE("rational arithmetic") {
  const Rational h(1, 2);
  CHECK(h + h == Rational(1));
  CHECK(Rational(2, -4) == -h);
  CHECK(Rational(3, 6).den() == 2);
  CHECK((h * Rational(2, 3)) == Rational(1, 3));
  CHECK(to_string(Rational(-7, 3)) == "-7/3");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(parse_rational("-7/3") == Rational(-7, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS(parse_rational("1/x"));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
  CHECK(Rational(1, 3) < h);
}

TEST_CASE("eigen_dense small cases") {
  Eigen::MatrixXd d = Eigen::Vector3d(3, 1, 2).asDiagonal();
  const auto s = eigen_dense(d);
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0].real() == doctest::Approx(1));
  CHECK(s.eigenvalues[2].real() == doctest::Approx(3));

  const double a = 0.7, b = -1.3, k = 0.4;
  Eigen::Matrix2d m;
  m << a, k, k, b;
  const auto t = eigen_dense(Eigen::MatrixXd(m));
  const double mid = (a + b) / 2, rad = std::sqrt(k * k + (a - b) * (a - b) / 4);
  CHECK(t.eigenvalues[0].real() == doctest::Approx(mid - rad).epsilon(1e-14));
  CHECK(t.eigenvalues[1].real() == doctest::Approx(mid + rad).epsilon(1e-14));

  // rotation block: complex pair sorted by imaginary part
  Eigen::Matrix2d r;
  r << 0, -2, 2, 0;
  const auto c = eigen_dense(Eigen::MatrixXd(r));
  CHECK(c.eigenvalues[0].imag() == doctest::Approx(-2));
  CHECK(c.eigenvalues[1].imag() == doctest::Approx(2));
  CHECK(c.max_imag() == doctest::Approx(2));
}

TEST_CASE("eigen_dense recovers D from P D P^-1") {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> pick(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 9;
    Eigen::VectorXd dvals(n);
    for (int i = 0; i < n; ++i) dvals(i) = pick(g);
    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) p(i, k) = u(g);
    }
    p += 3.0 * Eigen::MatrixXd::Identity(n, n);  // keep it well conditioned
    const Eigen::MatrixXd m = p * dvals.asDiagonal() * p.inverse();
    const auto s = eigen_dense(m, {true});
    std::vector<double> expected(dvals.data(), dvals.data() + n);
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(s.eigenvalues[static_cast<std::size_t>(i)].real() - expected[static_cast<std::size_t>(i)]) < 1e-10);
    }
    CHECK(eigen_residual(m, s) < 1e-10);
  }
}

TEST_CASE("eigen_dense refuses oversized input") {
  EigenOptions o;
  o.max_dim = 4;
  CHECK_THROWS_AS(eigen_dense(Eigen::MatrixXd::Identity(5, 5), o), std::length_error);
}

TEST_CASE("sparse products are associative") {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> u(-1, 1);
  std::uniform_int_distribution<int> idx(0, 35);
  const FockSpace space(2, 5);  // dim 36
  auto random_op = [&] {
    std::vector<Eigen::Triplet<double>> t;
    for (int k = 0; k < 60; ++k) t.emplace_back(idx(g), idx(g), u(g));
    return Operator<double>::from_triplets(space, t);
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_op(), b = random_op(), c = random_op();
    CHECK(max_abs((a * b) * c - a * (b * c)) < 1e-12);
  }
}

TEST_CASE("spinor basis index round trip") {
  const SpinorBasis b(3, 3, 2);
  CHECK(b.dim() == 7);
  CHECK(b.family() == "P(n+1,n)");
  for (Eigen::Index i = 0; i < b.dim(); ++i) CHECK(*b.find(b.monomial(i)) == i);
  CHECK_FALSE(b.find({Component::lower, 3}).has_value());
  PolySpinor p{{1, 2, 3, 4}, {5, 6, 7}};
  const auto q = PolySpinor::from_vector(b, p.to_vector(b));
  CHECK(q.upper == p.upper);
  CHECK(q.lower == p.lower);
  CHECK_THROWS(PolySpinor{{1}, {1}}.to_vector(b));
}

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

#include "osp21/algebra.hpp"
#include "osp21/ladder.hpp"
#include "osp21/spectra.hpp"

using namespace osp21;

namespace {

std::vector<double> sorted_real(const Spectrum& s) {
  auto r = s.real_parts();
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void check_same(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= tol * std::max(1.0, std::abs(b[i])));
}

std::mt19937_64 rng(99);
double draw() { return std::uniform_real_distribution<double>(-2, 2)(rng); }

}  // namespace

TEST_CASE("JC-Kerr full operator basics") {
  const FockSpace space(6, 0);
  JCKerrParams p{1.3, 0.7, 0.0, 0.0};
  std::vector<double> expected;
  for (int n = 0; n <= 6; ++n) {
    expected.push_back(p.omega * n + p.omega0 / 2);
    expected.push_back(p.omega * n - p.omega0 / 2);
  }
  check_same(sorted_real(eigen_dense(build_jck_full(space, p))), sorted(expected), 1e-12);

  p = {draw(), draw(), draw(), draw()};
  const auto h = build_jck_full(FockSpace(6, 3), p);
  CHECK(exactly_equal(h, transpose(h)));
  const FockSpace big(6, 3);
  CHECK(h.coeff(big.index({0, 0, 0}), big.index({0, 0, 0})) == doctest::Approx(-p.omega0 / 2));
  const auto nexc = make_number(big, Mode::one) + make_fermion_number(big);
  CHECK(max_abs(commutator(h, nexc), big.interior_mask(1)) < 1e-12);
}

TEST_CASE("JC-Kerr algebraic form and its embedding report") {
  const FockSpace space(6, 6);
  const auto g = build_generators(space, RealizationKind::ferm_a);
  CHECK(max_abs(2.0 * g.J0 + g.N - 2.0 * make_number(space, Mode::one)) < 1e-14);
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto sp = make_fermion(space, FermionOp::sigma_plus);
  const auto sm = make_fermion(space, FermionOp::sigma_minus);
  CHECK(max_abs(g.Wp - g.Vm - (sm * a1d + sp * a1)) < 1e-14);

  const auto e = build_jck_algebraic(space, {1.0, 0.0, 0.0, 0.0});
  const auto st = space.index({1, 0, 0});
  CHECK(std::abs(e.delta.coeff(st, st)) == doctest::Approx(1.0));
  const auto again = build_jck_algebraic(space, JCKerrParams{});
  CHECK(again.max_abs == build_jck_algebraic(space, JCKerrParams{}).max_abs);
  CHECK(again.frobenius > 0.0);
}

TEST_CASE("JC-Kerr sector operator") {
  JCKerrParams p{1.0, 0.5, 0.0, 0.1};
  for (int j = 1; j <= 5; ++j) {
    const auto h = build_jck_reduced(j, p);
    for (const auto& t : h.triplets()) CHECK(t.row() == t.col());
    // recurrence roots are the diagonal when decoupled
    std::vector<double> diag;
    for (Eigen::Index i = 0; i < h.dim(); ++i) diag.push_back(h.coeff(i, i));
    check_same(sorted_real(jck_recurrence(j, p)), sorted(diag), 1e-12);
  }
  p = {1.0, 0.5, 0.2, 0.1};
  const auto s = sorted_real(eigen_dense(build_jck_reduced(1, p)));
  CHECK(std::abs(s.front() - (p.lambda - p.omega + p.omega0)) < 1e-12);
  CHECK(std::abs(s.back() - (9 * p.lambda + 3 * p.omega + p.omega0)) < 1e-12);
  CHECK(jck_reduced_pieces(3).leaks == 2);
  CHECK_THROWS(build_jck_reduced(0, p));
}

TEST_CASE("recurrence roots equal the dense sector spectrum") {
  for (int j = 1; j <= 6; ++j) {
    for (int k = 0; k < 100; ++k) {
      const JCKerrParams p{draw(), draw(), draw(), draw()};
      const auto rec = jck_recurrence(j, p);
      CHECK(rec.provenance == Provenance::recurrence);
      check_same(sorted_real(rec), sorted_real(eigen_dense(build_jck_reduced(j, p))), 1e-9);
    }
  }
}

TEST_CASE("recurrence diff report") {
  const JCKerrParams p{1.1, 0.4, 0.3, 0.2};
  for (int j = 1; j <= 5; ++j) {
    const auto d = jck_recurrence_diff(j, p);
    const auto h = build_jck_reduced(j, p);
    const auto basis = jck_sector_basis(j);
    REQUIRE(d.rows.size() == static_cast<std::size_t>(basis.dim()));
    for (const auto& r : d.rows) {
      const Component c = r.label[0] == 'u' ? Component::upper : Component::lower;
      const int k = std::stoi(r.label.substr(1));
      const auto i = *basis.find({c, k});
      CHECK(r.derived_diag == doctest::Approx(h.coeff(i, i)));
      if (c == Component::upper) CHECK(r.printed_diag == doctest::Approx(r.derived_diag));
    }
    CHECK(d.partner_mismatches > 0);
    CHECK(d.printed_roots.size() == static_cast<std::size_t>(basis.dim()));
  }
  CHECK(jck_recurrence_diff(4, p).max_diag_diff > 0.1);
}

TEST_CASE("modified JC full operator") {
  const FockSpace space(4, 4);
  MJCParams p{0.9, 0.6, 0.0, 0.0};
  std::vector<double> expected;
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      expected.push_back(p.omega * (n1 + n2) + p.omega0 / 2);
      expected.push_back(p.omega * (n1 + n2) - p.omega0 / 2);
    }
  }
  check_same(sorted_real(eigen_dense(build_mjc_full(space, p))), sorted(expected), 1e-12);

  p = {draw(), draw(), draw(), draw()};
  const auto h = build_mjc_full(space, p);
  CHECK(exactly_equal(h, transpose(h)));
  const auto nexc = make_number(space, Mode::one) + make_number(space, Mode::two) +
                    make_fermion_number(space);
  CHECK(max_abs(commutator(h, nexc), space.interior_mask(1)) < 1e-12);
  const MJCParams swapped{p.omega, p.omega0, p.lambda2, p.lambda1};
  check_same(sorted_real(eigen_dense(h)), sorted_real(eigen_dense(build_mjc_full(space, swapped))), 1e-10);
  check_same(mjc_full_spectrum(space, p), mjc_full_spectrum(space, swapped), 1e-10);

  const auto e = build_mjc_algebraic(space, p);
  CHECK(max_abs(e.delta - (0.5 * p.omega0) * make_fermion_number(space)) < 1e-12);
}

TEST_CASE("modified JC sector operator without coupling") {
  const MJCParams p{1.2, 0.8, 0.0, 0.0};
  for (int j = 1; j <= 4; ++j) {
    const auto h = build_mjc_reduced(j, p);
    const auto b = mjc_sector_basis(j);
    for (Eigen::Index i = 0; i < b.dim(); ++i) {
      const bool up = b.monomial(i).component == Component::upper;
      const double want = up ? p.omega * (j - 2) + p.omega0 / 2 : p.omega * j - p.omega0 / 2;
      CHECK(h.coeff(i, i) == doctest::Approx(want));
    }
  }
  CHECK_THROWS(mjc_closed_form(2, 1, p));
}

TEST_CASE("closed-form eigenfunctions") {
  const MJCParams p{1.0, 1.0, 0.3, 0.4};
  const double big = p.lambda1 * p.lambda1 + p.lambda2 * p.lambda2;
  for (int j = 1; j <= 6; ++j) {
    for (int n = 0; n <= j; ++n) {
      const auto cf = mjc_closed_form(j, n, p);
      CHECK(cf.consistent);
      CHECK(cf.upper_zero == (n == 0));
      CHECK(cf.branches.size() == (n == 0 ? 1u : 2u));
      for (const auto& b : cf.branches) {
        CHECK(b.accepted);
        CHECK(b.residual < 1e-10);
        CHECK(b.phi.upper.size() == static_cast<std::size_t>(j));
        CHECK(b.phi.lower.size() == static_cast<std::size_t>(j + 1));
      }
      if (n == 0) {
        CHECK(cf.branches[0].energy == doctest::Approx(p.omega * j - p.omega0 / 2));
      } else {
        // energies from the 2x2 projected problem, written out independently
        const double root = 0.5 * std::sqrt(std::pow(p.omega0 - 2 * p.omega, 2) + 4 * n * big);
        CHECK(cf.branches[0].energy == doctest::Approx(p.omega * (j - 1) - root).epsilon(1e-12));
        CHECK(cf.branches[1].energy == doctest::Approx(p.omega * (j - 1) + root).epsilon(1e-12));
      }
      CHECK(cf.printed[0] == doctest::Approx(mjc_printed_eigenvalue(j, n, p, -1)));
    }
  }
  // n = j with lambda2 = 0: an Euler eigenstate
  const MJCParams q{1.0, 0.7, 0.5, 0.0};
  for (int j = 1; j <= 5; ++j) {
    for (const auto& b : mjc_closed_form(j, j, q).branches) CHECK(b.residual < 1e-12);
  }
  // printed n = 0 collapse
  CHECK(mjc_printed_eigenvalue(1, 0, p, 1) == doctest::Approx(std::abs(p.omega0 - 2 * p.omega)));
  CHECK_THROWS(mjc_closed_form(2, 3, p));
}

TEST_CASE("closed-form set equals the dense sector spectrum") {
  for (int j = 1; j <= 6; ++j) {
    for (int k = 0; k < 50; ++k) {
      MJCParams p{draw(), draw(), draw(), draw()};
      if (std::hypot(p.lambda1, p.lambda2) < 1e-3) p.lambda1 = 1.0;
      const auto cf = mjc_closed_form_spectrum(j, p);
      CHECK(cf.warnings.empty());
      check_same(sorted_real(cf), sorted_real(eigen_dense(build_mjc_reduced(j, p))), 1e-9);
    }
  }
}

TEST_CASE("images of the full operators sit inside the full spectra") {
  const FockSpace space(8, 8);
  for (int j = 1; j <= 4; ++j) {
    const auto m = compare_reduced_vs_full(j, MJCParams{}, space);
    CHECK(m.image_in_full.all_found());
    const auto c = compare_reduced_vs_full(j, JCKerrParams{}, space);
    CHECK(c.image_in_full.all_found());
    CHECK(c.embedding_max_abs > 0.0);
  }
  CHECK_THROWS_AS(compare_reduced_vs_full(3, MJCParams{}, FockSpace(6, 8)), std::invalid_argument);
}

TEST_CASE("greedy multiset matching") {
  const auto m = match_multiset({1.0, 1.0, 2.0, 5.0}, {2.0 + 1e-12, 1.0, 0.999999999999, 7.0}, 1e-8, 1e-8);
  CHECK(m.matched.size() == 3);
  REQUIRE(m.unmatched_reference.size() == 1);
  CHECK(m.unmatched_reference[0] == 5.0);
  REQUIRE(m.unmatched_candidates.size() == 1);
  CHECK(m.unmatched_candidates[0] == 7.0);
}

TEST_CASE("spectra scale with the couplings") {
  const double c = 2.0;
  for (int k = 0; k < 10; ++k) {
    const JCKerrParams p{draw(), draw(), draw(), draw()};
    const JCKerrParams s{c * p.omega, c * p.omega0, c * p.kappa, c * p.lambda};
    auto a = sorted_real(jck_recurrence(3, p));
    for (auto& x : a) x *= c;
    check_same(a, sorted_real(jck_recurrence(3, s)), 1e-12);
    auto f = jck_full_spectrum(FockSpace(5, 0), p);
    for (auto& x : f) x *= c;
    check_same(f, jck_full_spectrum(FockSpace(5, 0), s), 1e-12);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(validate(JCKerrParams{NAN, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(MJCParams{0, INFINITY, 0, 0}), std::invalid_argument);
  CHECK(parse_model("MJC") == Model::mjc);
  CHECK_THROWS(parse_model("xyz"));
}

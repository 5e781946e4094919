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

#include "osp21/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "osp21/ladder.hpp"

namespace osp21 {

bool AlgebraReport::passed() const {
  return std::all_of(relations.begin(), relations.end(),
                     [](const RelationResult& r) { return r.informational || r.passed; });
}

const RelationResult* AlgebraReport::worst() const {
  const RelationResult* w = nullptr;
  for (const auto& r : relations) {
    if (r.informational) continue;
    if (w == nullptr || r.residual > w->residual || (!r.passed && w->passed)) w = &r;
  }
  return w;
}

double AlgebraReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : relations) {
    if (!r.informational) m = std::max(m, r.residual);
  }
  return m;
}

void AlgebraReport::append(const std::vector<RelationResult>& more) {
  relations.insert(relations.end(), more.begin(), more.end());
}

GeneratorSet<double> build_generators(const FockSpace& space, RealizationKind realization) {
  if (space.cutoff1() < 2 || space.cutoff2() < 2) {
    throw std::invalid_argument("build_generators: cutoffs must be >= 2");
  }
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto a2 = make_boson(space, Mode::two, Ladder::annihilate);
  const auto a2d = make_boson(space, Mode::two, Ladder::create);
  const auto n1 = make_number(space, Mode::one);
  const auto n2 = make_number(space, Mode::two);
  const auto f = make_fermion(space, FermionOp::sigma_minus);
  const auto fd = make_fermion(space, FermionOp::sigma_plus);
  const auto fdf = make_fermion_number(space);
  const auto id = Operator<double>::identity(space);

  const auto N = n1 + n2;
  const bool a = realization == RealizationKind::ferm_a;
  const auto& up = a ? fd : f;    // fermion factor of V+-
  const auto& down = a ? f : fd;  // fermion factor of W+-
  const auto occupied = a ? fdf : id - fdf;  // f+f or f f+

  return GeneratorSet<double>{
      a1d * a2,
      a2d * a1,
      0.5 * (n1 - n2),
      0.5 * N + occupied,
      up * a2,
      -(up * a1),
      down * a1d,
      down * a2d,
      N,
      realization,
  };
}

namespace {

template <typename Scalar>
Scalar half() {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return Rational(1, 2);
  } else {
    return Scalar(0.5);
  }
}

template <typename Scalar>
RelationResult evaluate(std::string id, const Operator<Scalar>& lhs, const Operator<Scalar>& rhs,
                        const std::vector<bool>& columns, double tol) {
  RelationResult r;
  r.id = std::move(id);
  const double diff = max_abs(lhs - rhs, columns);
  if constexpr (std::is_same_v<Scalar, Rational>) {
    r.residual = diff;
    r.passed = diff == 0.0;
  } else {
    const double scale = std::max({1.0, max_abs(lhs, columns), max_abs(rhs, columns)});
    r.residual = diff / scale;
    r.passed = r.residual < tol;
  }
  return r;
}

int fermion_label(const Domain& d, Eigen::Index i) {
  if (const auto* f = std::get_if<FockSpace>(&d)) return f->state(i).s;
  return std::get<SpinorBasis>(d).monomial(i).component == Component::upper ? 1 : 0;
}

}  // namespace

template <typename Scalar>
std::vector<RelationResult> check_structure_relations(const GeneratorSet<Scalar>& g,
                                                      const std::vector<bool>& columns,
                                                      double tol) {
  const Scalar h = half<Scalar>();
  const Scalar two = Scalar(2);
  const Operator<Scalar> zero(g.domain());
  std::vector<RelationResult> out;
  auto add = [&](std::string id, const Operator<Scalar>& lhs, const Operator<Scalar>& rhs) {
    out.push_back(evaluate(std::move(id), lhs, rhs, columns, tol));
  };

  add("[J+,J-]=2J0", commutator(g.Jp, g.Jm), two * g.J0);
  add("[J0,J+]=+J+", commutator(g.J0, g.Jp), g.Jp);
  add("[J0,J-]=-J-", commutator(g.J0, g.Jm), -g.Jm);
  add("[J,J+]=0", commutator(g.J, g.Jp), zero);
  add("[J,J-]=0", commutator(g.J, g.Jm), zero);
  add("[J,J0]=0", commutator(g.J, g.J0), zero);

  add("[J0,V+]=+V+/2", commutator(g.J0, g.Vp), h * g.Vp);
  add("[J0,V-]=-V-/2", commutator(g.J0, g.Vm), -(h * g.Vm));
  add("[J0,W+]=+W+/2", commutator(g.J0, g.Wp), h * g.Wp);
  add("[J0,W-]=-W-/2", commutator(g.J0, g.Wm), -(h * g.Wm));
  add("[J,V+]=V+/2", commutator(g.J, g.Vp), h * g.Vp);
  add("[J,V-]=V-/2", commutator(g.J, g.Vm), h * g.Vm);
  add("[J,W+]=-W+/2", commutator(g.J, g.Wp), -(h * g.Wp));
  add("[J,W-]=-W-/2", commutator(g.J, g.Wm), -(h * g.Wm));

  add("[J+,V-]=V+", commutator(g.Jp, g.Vm), g.Vp);
  add("[J-,V+]=V-", commutator(g.Jm, g.Vp), g.Vm);
  add("[J+,W-]=W+", commutator(g.Jp, g.Wm), g.Wp);
  add("[J-,W+]=W-", commutator(g.Jm, g.Wp), g.Wm);
  add("[J+,V+]=0", commutator(g.Jp, g.Vp), zero);
  add("[J-,V-]=0", commutator(g.Jm, g.Vm), zero);
  add("[J+,W+]=0", commutator(g.Jp, g.Wp), zero);
  add("[J-,W-]=0", commutator(g.Jm, g.Wm), zero);

  add("{V+,W-}=-J0+J", anticommutator(g.Vp, g.Wm), g.J - g.J0);
  add("{V-,W+}=-J0-J", anticommutator(g.Vm, g.Wp), -(g.J0 + g.J));

  add("{V+,V+}=0", anticommutator(g.Vp, g.Vp), zero);
  add("{V-,V-}=0", anticommutator(g.Vm, g.Vm), zero);
  add("{V+,V-}=0", anticommutator(g.Vp, g.Vm), zero);
  add("{W+,W+}=0", anticommutator(g.Wp, g.Wp), zero);
  add("{W-,W-}=0", anticommutator(g.Wm, g.Wm), zero);
  add("{W+,W-}=0", anticommutator(g.Wp, g.Wm), zero);
  return out;
}

std::vector<RelationResult> check_ladder_relations(const FockSpace& space,
                                                   const std::vector<bool>& columns, double tol) {
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto a2 = make_boson(space, Mode::two, Ladder::annihilate);
  const auto a2d = make_boson(space, Mode::two, Ladder::create);
  const auto f = make_fermion(space, FermionOp::sigma_minus);
  const auto fd = make_fermion(space, FermionOp::sigma_plus);
  const auto id = Operator<double>::identity(space);
  const Operator<double> zero(space);
  return {
      evaluate("[a1,a1+]=1", commutator(a1, a1d), id, columns, tol),
      evaluate("[a2,a2+]=1", commutator(a2, a2d), id, columns, tol),
      evaluate("[a1,a2+]=0", commutator(a1, a2d), zero, columns, tol),
      evaluate("[a2,a1+]=0", commutator(a2, a1d), zero, columns, tol),
      evaluate("[a1,a2]=0", commutator(a1, a2), zero, columns, tol),
      evaluate("{f,f+}=1", anticommutator(f, fd), id, columns, tol),
      evaluate("{f,f}=0", anticommutator(f, f), zero, columns, tol),
  };
}

template <typename Scalar>
Parity fermion_parity(const Operator<Scalar>& op) {
  bool even = false;
  bool odd = false;
  for (const auto& t : op.triplets()) {
    if (fermion_label(op.domain(), t.row()) == fermion_label(op.domain(), t.col())) {
      even = true;
    } else {
      odd = true;
    }
  }
  if (even && odd) return Parity::mixed;
  if (even) return Parity::even;
  if (odd) return Parity::odd;
  return Parity::zero;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::zero: return "zero";
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    case Parity::mixed: return "mixed";
  }
  return "unknown";
}

template <typename Scalar>
std::vector<RelationResult> check_grading(const GeneratorSet<Scalar>& g) {
  std::vector<RelationResult> out;
  for (const auto& [name, op] : g.named()) {
    const bool odd_expected = name[0] == 'V' || name[0] == 'W';
    const Parity p = fermion_parity(*op);
    RelationResult r;
    r.id = "grading:" + std::string(name) + (odd_expected ? " odd" : " even");
    r.passed = p == (odd_expected ? Parity::odd : Parity::even) || p == Parity::zero;
    r.residual = r.passed ? 0.0 : 1.0;
    out.push_back(r);
  }
  // Products: even*even and odd*odd are even, even*odd is odd.
  const std::pair<const Operator<Scalar>*, const Operator<Scalar>*> even_pairs[] = {
      {&g.Jp, &g.Jm}, {&g.Vp, &g.Wm}, {&g.Vm, &g.Wp}, {&g.Vp, &g.Wp}};
  for (const auto& [x, y] : even_pairs) {
    const Parity p = fermion_parity(Operator<Scalar>((*x) * (*y)));
    RelationResult r;
    r.id = "grading:product even";
    r.passed = p == Parity::even || p == Parity::zero;
    r.residual = r.passed ? 0.0 : 1.0;
    out.push_back(r);
  }
  {
    const Parity p = fermion_parity(Operator<Scalar>(g.Jp * g.Vm));
    RelationResult r;
    r.id = "grading:product odd";
    r.passed = p == Parity::odd || p == Parity::zero;
    r.residual = r.passed ? 0.0 : 1.0;
    out.push_back(r);
  }
  return out;
}

AlgebraReport verify_algebra(const GeneratorSet<double>& g, int interior_margin, double tol) {
  const auto* space = std::get_if<FockSpace>(&g.domain());
  if (space == nullptr) throw std::invalid_argument("verify_algebra: expects a Fock-space generator set");
  AlgebraReport rep;
  rep.subject = "fock:" + to_string(g.realization);
  rep.margin = interior_margin;
  rep.cutoffs = std::array<int, 2>{space->cutoff1(), space->cutoff2()};
  rep.tolerance = tol;
  const auto mask = space->interior_mask(interior_margin);
  rep.append(check_structure_relations(g, mask, tol));
  rep.append(check_ladder_relations(*space, mask, tol));
  rep.append(check_grading(g));
  return rep;
}

template <typename Scalar>
AlgebraReport verify_qpm_closure(const GeneratorSet<Scalar>& g, int interior_margin, double tol) {
  AlgebraReport rep;
  rep.subject = "qpm-closure:" + to_string(g.realization);
  rep.tolerance = tol;
  std::vector<bool> mask;
  if (const auto* space = std::get_if<FockSpace>(&g.domain())) {
    rep.margin = interior_margin;
    rep.cutoffs = std::array<int, 2>{space->cutoff1(), space->cutoff2()};
    mask = space->interior_mask(interior_margin);
  } else {
    rep.exact = true;
    rep.j = std::get<SpinorBasis>(g.domain()).j();
  }
  const auto Qp = anticommutator(g.Vp, g.Wp);
  const auto Qm = -anticommutator(g.Vm, g.Wm);
  const Operator<Scalar> zero(g.domain());
  const Scalar two = Scalar(2);
  auto add = [&](std::string id, const Operator<Scalar>& lhs, const Operator<Scalar>& rhs,
                 bool informational = false) {
    auto r = evaluate(std::move(id), lhs, rhs, mask, tol);
    r.informational = informational;
    rep.relations.push_back(r);
  };
  add("Q+={V+,W+}", anticommutator(g.Vp, g.Wp), Qp);
  add("[J0,Q+]=+Q+", commutator(g.J0, Qp), Qp);
  add("[J0,Q-]=-Q-", commutator(g.J0, Qm), -Qm);
  add("[J+,Q+]=0", commutator(g.Jp, Qp), zero);
  add("[J-,Q-]=0", commutator(g.Jm, Qm), zero);
  add("[J-,Q+]=-2J0", commutator(g.Jm, Qp), -(two * g.J0));
  add("[J+,Q-]=+2J0", commutator(g.Jp, Qm), two * g.J0);
  add("[N,Q+]=0", commutator(g.N, Qp), zero);
  add("[N,Q-]=0", commutator(g.N, Qm), zero);
  add("[J,Q+]=0", commutator(g.J, Qp), zero);
  add("[J,Q-]=0", commutator(g.J, Qm), zero);
  add("Q+=J+", Qp, g.Jp, true);
  add("Q-=J-", Qm, g.Jm, true);
  return rep;
}

template <typename Scalar>
std::vector<CoefficientFit> fit_j_odd_coefficients(const GeneratorSet<Scalar>& g,
                                                   const std::vector<bool>& columns) {
  std::vector<CoefficientFit> out;
  const std::pair<const char*, const Operator<Scalar>*> odd[] = {
      {"[J,V+]", &g.Vp}, {"[J,V-]", &g.Vm}, {"[J,W+]", &g.Wp}, {"[J,W-]", &g.Wm}};
  for (const auto& [id, x] : odd) {
    const auto cx = commutator(g.J, *x);
    // <X, [J,X]> / <X, X> over the selected columns, in double.
    const Eigen::MatrixXd dx = x->to_dense();
    const Eigen::MatrixXd dc = cx.to_dense();
    double num = 0.0;
    double den = 0.0;
    for (Eigen::Index c = 0; c < dx.cols(); ++c) {
      if (!columns.empty() && !columns[static_cast<std::size_t>(c)]) continue;
      num += dx.col(c).dot(dc.col(c));
      den += dx.col(c).squaredNorm();
    }
    CoefficientFit fit;
    fit.relation = id;
    fit.coefficient = den > 0 ? num / den : 0.0;
    double mis = 0.0;
    double scale = 1.0;
    for (Eigen::Index c = 0; c < dx.cols(); ++c) {
      if (!columns.empty() && !columns[static_cast<std::size_t>(c)]) continue;
      mis = std::max(mis, (dc.col(c) - fit.coefficient * dx.col(c)).cwiseAbs().maxCoeff());
      scale = std::max(scale, dc.col(c).cwiseAbs().maxCoeff());
    }
    fit.residual = mis / scale;
    out.push_back(fit);
  }
  return out;
}

template std::vector<RelationResult> check_structure_relations(const GeneratorSet<double>&,
                                                               const std::vector<bool>&, double);
template std::vector<RelationResult> check_structure_relations(const GeneratorSet<Rational>&,
                                                               const std::vector<bool>&, double);
template std::vector<RelationResult> check_grading(const GeneratorSet<double>&);
template std::vector<RelationResult> check_grading(const GeneratorSet<Rational>&);
template AlgebraReport verify_qpm_closure(const GeneratorSet<double>&, int, double);
template AlgebraReport verify_qpm_closure(const GeneratorSet<Rational>&, int, double);
template std::vector<CoefficientFit> fit_j_odd_coefficients(const GeneratorSet<double>&,
                                                            const std::vector<bool>&);
template std::vector<CoefficientFit> fit_j_odd_coefficients(const GeneratorSet<Rational>&,
                                                            const std::vector<bool>&);
template Parity fermion_parity(const Operator<double>&);
template Parity fermion_parity(const Operator<Rational>&);

}  // namespace osp21

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

#include "osp21/transform.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace osp21 {

namespace {

using R = Rational;

const R kHalf(1, 2);

bool term_is_zero(const R& c, const R& jc) { return c == R(0) && jc == R(0); }

int s_of(Component c) { return c == Component::upper ? 1 : 0; }

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::pair(a.component, a.degree) < std::pair(b.component, b.degree);
  }
};

// Image of one monomial, like terms combined and zeros removed.
std::map<Monomial, R, MonomialLess> apply(const SpinorDiffOp& op, int j, const Monomial& m) {
  std::map<Monomial, R, MonomialLess> out;
  for (const auto& t : op.terms()) {
    if (t.from != m.component || m.degree < t.d_power) continue;
    R c = t.constant + t.j_coeff * R(j);
    for (int k = 0; k < t.d_power; ++k) c = c * R(m.degree - k);
    const Monomial target{t.to, m.degree - t.d_power + t.x_power};
    auto [it, fresh] = out.try_emplace(target, c);
    if (!fresh) it->second = it->second + c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == R(0); });
  return out;
}

}  // namespace

SpinorDiffOp& SpinorDiffOp::same(int x_power, int d_power, Rational c_upper, Rational c_lower,
                                 Rational j_coeff) {
  if (!term_is_zero(c_upper, j_coeff)) {
    terms_.push_back({Component::upper, Component::upper, x_power, d_power, c_upper, j_coeff});
  }
  if (!term_is_zero(c_lower, j_coeff)) {
    terms_.push_back({Component::lower, Component::lower, x_power, d_power, c_lower, j_coeff});
  }
  return *this;
}

SpinorDiffOp& SpinorDiffOp::raise(int x_power, int d_power, Rational c, Rational j_coeff) {
  if (!term_is_zero(c, j_coeff)) {
    terms_.push_back({Component::lower, Component::upper, x_power, d_power, c, j_coeff});
  }
  return *this;
}

SpinorDiffOp& SpinorDiffOp::lower(int x_power, int d_power, Rational c, Rational j_coeff) {
  if (!term_is_zero(c, j_coeff)) {
    terms_.push_back({Component::upper, Component::lower, x_power, d_power, c, j_coeff});
  }
  return *this;
}

Operator<Rational> realize(const SpinorDiffOp& op, const SpinorBasis& basis, int* leaks) {
  std::vector<Eigen::Triplet<R>> trip;
  int dropped = 0;
  for (Eigen::Index col = 0; col < basis.dim(); ++col) {
    for (const auto& [m, c] : apply(op, basis.j(), basis.monomial(col))) {
      const auto row = basis.find(m);
      if (!row) {
        ++dropped;
        continue;
      }
      trip.emplace_back(*row, col, c);
    }
  }
  if (leaks != nullptr) *leaks = dropped;
  return Operator<R>::from_triplets(basis, trip).pruned();
}

Operator<double> realize_on_fock(const SpinorDiffOp& op, const FockSpace& space) {
  std::vector<Eigen::Triplet<double>> trip;
  for (Eigen::Index col = 0; col < space.dim(); ++col) {
    const FockState st = space.state(col);
    for (const auto& t : op.terms()) {
      if (s_of(t.from) != st.s || st.n1 < t.d_power) continue;
      double amp = to_double(t.constant) + to_double(t.j_coeff) * st.n2;
      for (int k = 0; k < t.d_power; ++k) amp *= std::sqrt(st.n1 - k);
      const int mid = st.n1 - t.d_power;
      for (int k = 1; k <= t.x_power; ++k) amp *= std::sqrt(mid + k);
      const FockState out{mid + t.x_power, st.n2, s_of(t.to)};
      if (amp == 0.0 || !space.contains(out)) continue;
      trip.emplace_back(space.index(out), col, amp);
    }
  }
  return Operator<double>::from_triplets(space, trip).pruned();
}

KetOp as_ket_op(const SpinorDiffOp& op) {
  const auto terms = op.terms();
  return KetOp([terms](const Ket& in) {
    Ket out;
    out.inherit(in);
    for (const auto& [st, a] : in.terms()) {
      for (const auto& t : terms) {
        if (s_of(t.from) != st.s || st.n1 < t.d_power) continue;
        double amp = a * (to_double(t.constant) + to_double(t.j_coeff) * st.n2);
        for (int k = 0; k < t.d_power; ++k) amp *= std::sqrt(st.n1 - k);
        const int mid = st.n1 - t.d_power;
        for (int k = 1; k <= t.x_power; ++k) amp *= std::sqrt(mid + k);
        out.add({mid + t.x_power, st.n2, s_of(t.to)}, amp);
      }
    }
    for (const auto& st : in.formal()) {
      for (const auto& t : terms) {
        if (s_of(t.from) == st.s) out.add_formal({st.n1 - t.d_power + t.x_power, st.n2, s_of(t.to)});
      }
    }
    return out;
  });
}

std::string to_string(FormSource s) { return s == FormSource::derived ? "derived" : "printed"; }

FormSource parse_form_source(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "derived") return FormSource::derived;
  if (t == "printed") return FormSource::printed;
  throw std::invalid_argument("unknown form source '" + s + "' (expected derived or printed)");
}

namespace {

// Even part shared by S+1 (and, as tabulated, S-1).
void s_plus_even(PrimedForms& f) {
  f.Jp.same(2, 1, -1, -1, 0).same(1, 0, -1, 0, 1);  // -x^2 d + x(j - s)
  f.Jm.same(0, 1, 1, 1, 0);                         // d
  f.J0.same(1, 1, 1, 1, 0).same(0, 0, kHalf, 0, -kHalf);  // (2xd - j + s)/2
}

// Even part of T+1 as tabulated; the lowering generator is x d^2 + (j + s).
void t_printed_even(PrimedForms& f) {
  f.Jp.same(1, 0, 1, 1, 0);
  f.Jm.same(1, 2, 1, 1, 0).same(0, 0, 1, 0, 1);
  f.J0.same(1, 1, 1, 1, 0).same(0, 0, -kHalf, 0, -kHalf);
}

PrimedForms s_plus() {
  PrimedForms f;
  s_plus_even(f);
  f.J.same(0, 0, kHalf, 0, kHalf);          // (j + s)/2
  f.Vp.raise(0, 0, 0, 1).raise(1, 1, -1, 0);  // sigma_+ (j - xd)
  f.Vm.raise(0, 1, -1, 0);                  // -sigma_+ d
  f.Wp.lower(1, 0, 1, 0);                   // sigma_- x
  f.Wm.lower(0, 0, 1, 0);                   // sigma_-
  f.N.same(0, 0, -1, 0, 1);                 // j - s
  return f;
}

// Odd part and J shared by the derived and tabulated S-1 forms.
void s_minus_rest(PrimedForms& f) {
  f.J.same(0, 0, kHalf, 1, kHalf);          // (j + 2 - s)/2
  f.Vp.lower(1, 1, -1, 0).lower(0, 0, 1, 1);  // -sigma_- (xd - j - 1)
  f.Vm.lower(0, 1, -1, 0);                  // -sigma_- d
  f.Wp.raise(1, 0, 1, 0);                   // sigma_+ x
  f.Wm.raise(0, 0, 1, 0);                   // sigma_+
  f.N.same(0, 0, 1, 0, 1);                  // j + s
}

PrimedForms s_minus(FormSource source) {
  PrimedForms f;
  if (source == FormSource::printed) {
    s_plus_even(f);
  } else {
    f.Jp.same(2, 1, -1, -1, 0).same(1, 0, 1, 0, 1);  // -x^2 d + x(j + s)
    f.Jm.same(0, 1, 1, 1, 0);
    f.J0.same(1, 1, 1, 1, 0).same(0, 0, -kHalf, 0, -kHalf);  // (2xd - j - s)/2
  }
  s_minus_rest(f);
  return f;
}

void t_derived_even(PrimedForms& f, int eta) {
  f.Jp.same(1, 0, 1, 1, 0);                                      // x
  f.Jm.same(1, 2, -1, -1, 0).same(0, 1, R(eta), 0, 1);          // -x d^2 + (j + eta s) d
  f.J0.same(1, 1, 1, 1, 0).same(0, 0, R(-eta) * kHalf, 0, -kHalf);  // (2xd - j - eta s)/2
}

PrimedForms t_plus(FormSource source) {
  PrimedForms f;
  if (source == FormSource::printed) {
    t_printed_even(f);
  } else {
    t_derived_even(f, 1);
  }
  f.J.same(0, 0, kHalf, 1, kHalf);            // (j + 2 - s)/2
  f.Vp.lower(0, 0, 1, 0);                     // sigma_-
  f.Vm.lower(0, 1, -1, 0);                    // -sigma_- d
  f.Wp.raise(1, 0, 1, 0);                     // sigma_+ x
  f.Wm.raise(0, 0, 1, 1).raise(1, 1, -1, 0);  // sigma_+ (j - xd + 1)
  f.N.same(0, 0, 1, 0, 1);                    // j + s
  return f;
}

PrimedForms t_minus(FormSource source) {
  PrimedForms f;
  if (source == FormSource::printed) {
    t_printed_even(f);
    f.J.same(0, 0, -kHalf, 0, kHalf);  // (j - s)/2
  } else {
    t_derived_even(f, -1);
    f.J.same(0, 0, kHalf, 0, kHalf);  // (j + s)/2
  }
  f.Vp.raise(0, 0, 1, 0);                     // sigma_+
  f.Vm.raise(0, 1, -1, 0);                    // -sigma_+ d
  f.Wp.lower(1, 0, 1, 0);                     // sigma_- x
  f.Wm.lower(0, 0, 0, 1).lower(1, 1, -1, 0);  // sigma_- (j - xd)
  f.N.same(0, 0, -1, 0, 1);                   // j - s
  return f;
}

}  // namespace

PrimedForms primed_forms(const TransformTag& tag, FormSource source) {
  if (tag.metric == Metric::S) return tag.sign > 0 ? s_plus() : s_minus(source);
  return tag.sign > 0 ? t_plus(source) : t_minus(source);
}

SpinorBasis basis_for(const TransformTag& tag, int j) {
  if (j < 1) throw std::invalid_argument("basis_for: j must be >= 1");
  const bool short_upper = (tag.metric == Metric::S) == (tag.sign > 0);
  return short_upper ? SpinorBasis(j, j - 1, j) : SpinorBasis(j, j + 1, j);
}

std::string printed_basis_family(const TransformTag& tag) {
  if (tag.metric == Metric::S) return tag.sign > 0 ? "P(n+1,n)" : "P(n,n+1)";
  return tag.sign > 0 ? "P(n+1,n)" : "P(n,n-1)";
}

GeneratorSet<Rational> build_transformed_generators(int j, const TransformTag& tag,
                                                    FormSource source) {
  const SpinorBasis basis = basis_for(tag, j);
  const PrimedForms f = primed_forms(tag, source);
  return GeneratorSet<Rational>{
      realize(f.Jp, basis), realize(f.Jm, basis), realize(f.J0, basis),
      realize(f.J, basis),  realize(f.Vp, basis), realize(f.Vm, basis),
      realize(f.Wp, basis), realize(f.Wm, basis), realize(f.N, basis),
      tag,
  };
}

AlgebraReport verify_transformed_algebra(int j, const TransformTag& tag, FormSource source) {
  const auto g = build_transformed_generators(j, tag, source);
  AlgebraReport rep;
  rep.subject = "transformed:" + to_string(tag) + ":" + to_string(source);
  rep.j = j;
  rep.exact = true;
  rep.append(check_structure_relations(g, {}, 0.0));
  rep.append(check_grading(g));
  return rep;
}

InvarianceReport check_basis_invariance(const TransformTag& tag, int j, FormSource source) {
  const SpinorBasis basis = basis_for(tag, j);
  const PrimedForms f = primed_forms(tag, source);
  InvarianceReport rep;
  for (const auto& [name, op] : f.named()) {
    int leaks = 0;
    realize(*op, basis, &leaks);
    rep.leaks += leaks;
    // Monomials up to three degrees above the basis; no generator lowers by more.
    for (const Component c : {Component::upper, Component::lower}) {
      const int top = c == Component::upper ? basis.upper_degree() : basis.lower_degree();
      for (int deg = top + 1; deg <= top + 3; ++deg) {
        for (const auto& [m, coeff] : apply(*op, j, {c, deg})) {
          if (basis.find(m)) ++rep.back_leaks;
        }
      }
    }
  }
  return rep;
}

std::vector<FormDiff> diff_printed_forms(const TransformTag& tag, int j) {
  const SpinorBasis basis = basis_for(tag, j);
  const PrimedForms d = primed_forms(tag, FormSource::derived);
  const PrimedForms p = primed_forms(tag, FormSource::printed);
  const auto dn = d.named();
  const auto pn = p.named();
  std::vector<FormDiff> out;
  for (std::size_t i = 0; i < dn.size(); ++i) {
    const auto diff = realize(*dn[i].second, basis) - realize(*pn[i].second, basis);
    FormDiff fd;
    fd.generator = std::string(dn[i].first);
    fd.identical = is_zero(diff);
    fd.max_abs_diff = max_abs(diff);
    out.push_back(fd);
  }
  return out;
}

namespace {

int metric_exponent(const TransformTag& tag, const FockState& st, bool inverse) {
  if (tag.metric == Metric::S) return st.n1 + tag.sign * st.s;
  const int e = -st.n1 + tag.sign * st.s;
  return inverse ? -e : e;
}

MetricOperator metric_matrix(const FockSpace& space, const TransformTag& tag, bool inverse) {
  std::vector<Eigen::Triplet<double>> trip;
  std::vector<ColumnStatus> status(static_cast<std::size_t>(space.dim()), ColumnStatus::ok);
  const bool raising = tag.metric == Metric::S;
  for (Eigen::Index col = 0; col < space.dim(); ++col) {
    const FockState st = space.state(col);
    const int e = metric_exponent(tag, st, inverse);
    auto& flag = status[static_cast<std::size_t>(col)];
    if (e < 0) {
      flag = ColumnStatus::undefined;
      continue;
    }
    double amp = 1.0;
    FockState out = st;
    if (raising) {
      out.n2 = st.n2 + e;
      if (out.n2 > space.cutoff2()) {
        flag = ColumnStatus::overflow;
        continue;
      }
      for (int k = 1; k <= e; ++k) amp *= std::sqrt(st.n2 + k);
    } else {
      if (e > st.n2) continue;  // a2^e annihilates the state
      out.n2 = st.n2 - e;
      for (int k = 0; k < e; ++k) amp *= std::sqrt(st.n2 - k);
    }
    trip.emplace_back(space.index(out), col, amp);
  }
  return MetricOperator{tag, inverse, Operator<double>::from_triplets(space, trip),
                        std::move(status)};
}

}  // namespace

MetricOperator build_metric(const FockSpace& space, const TransformTag& tag) {
  return metric_matrix(space, tag, false);
}

MetricOperator build_metric_inverse(const FockSpace& space, const TransformTag& tag) {
  if (tag.metric != Metric::T) {
    throw std::invalid_argument("build_metric_inverse: only defined for T");
  }
  return metric_matrix(space, tag, true);
}

KetOp metric_ket(const TransformTag& tag) {
  auto e = [tag](const FockState& st) { return metric_exponent(tag, st, false); };
  return tag.metric == Metric::S ? kets::a2_dag_power(e) : kets::a2_power(e);
}

KetOp metric_inverse_ket(const TransformTag& tag) {
  if (tag.metric != Metric::T) {
    throw std::invalid_argument("metric_inverse_ket: only defined for T");
  }
  return kets::a2_power([tag](const FockState& st) { return metric_exponent(tag, st, true); });
}

namespace {

std::array<KetOp, 9> source_generators(RealizationKind kind) {
  using namespace kets;
  const bool a = kind == RealizationKind::ferm_a;
  const KetOp up = a ? sigma_plus() : sigma_minus();
  const KetOp down = a ? sigma_minus() : sigma_plus();
  return {
      a1_dag() * a2(),
      a2_dag() * a1(),
      diagonal([](const FockState& st) { return 0.5 * (st.n1 - st.n2); }),
      diagonal([a](const FockState& st) {
        return 0.5 * (st.n1 + st.n2) + (a ? st.s : 1 - st.s);
      }),
      up * a2(),
      -1.0 * (up * a1()),
      down * a1_dag(),
      down * a2_dag(),
      diagonal([](const FockState& st) { return double(st.n1 + st.n2); }),
  };
}

struct KetRelation {
  std::string id;
  KetOp lhs;
  KetOp rhs;
  bool informational = false;
};

RelationResult check_columns(const KetRelation& rel, const FockSpace& space, double tol) {
  int checked = 0;
  int overflow = 0;
  int undefined = 0;
  double worst = 0.0;
  for (Eigen::Index col = 0; col < space.dim(); ++col) {
    const FockState st = space.state(col);
    const Ket l = rel.lhs(st);
    const Ket r = rel.rhs(st);
    if (l.undefined() || r.undefined()) {
      ++undefined;
      continue;
    }
    if (std::max(l.peak1(), r.peak1()) > space.cutoff1() ||
        std::max(l.peak2(), r.peak2()) > space.cutoff2()) {
      ++overflow;
      continue;
    }
    ++checked;
    const double scale = std::max({1.0, l.max_abs(), r.max_abs()});
    worst = std::max(worst, (l - r).max_abs() / scale);
  }
  RelationResult res;
  res.id = rel.id;
  res.residual = worst;
  res.passed = checked > 0 && res.residual < tol;
  res.informational = rel.informational;
  res.detail = "checked=" + std::to_string(checked) + " overflow=" + std::to_string(overflow) +
               " undefined=" + std::to_string(undefined);
  return res;
}

std::vector<KetRelation> s_relations(const TransformTag& tag) {
  using namespace kets;
  const KetOp S = metric_ket(tag);
  const int alpha = tag.sign;
  const KetOp n2_minus_n = diagonal(
      [alpha](const FockState& st) { return double(st.n2 - st.n1 - alpha * st.s); });
  std::vector<KetRelation> rel = {
      {"S a1+ = a1+ a2+ S", S * a1_dag(), a1_dag() * a2_dag() * S},
      {"a2+ S a1 = a1 S", a2_dag() * S * a1(), a1() * S},
      {"S a2+ = a2+ S", S * a2_dag(), a2_dag() * S},
      {"a2+ S a2 = (N2 - n) S", a2_dag() * S * a2(), n2_minus_n * S},
  };
  if (alpha > 0) {
    rel.push_back({"S sigma+ = sigma+ a2+ S", S * sigma_plus(), sigma_plus() * a2_dag() * S});
    rel.push_back({"a2+ S sigma- = sigma- S", a2_dag() * S * sigma_minus(), sigma_minus() * S});
  } else {
    rel.push_back({"a2+ S sigma+ = sigma+ S", a2_dag() * S * sigma_plus(), sigma_plus() * S});
    rel.push_back({"S sigma- = sigma- a2+ S", S * sigma_minus(), sigma_minus() * a2_dag() * S});
  }
  const auto src = source_generators(tag.source());
  const PrimedForms f = primed_forms(tag);
  const auto names = f.named();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string g(names[i].first);
    rel.push_back({"S " + g + " = " + g + "' S", S * src[i], as_ket_op(*names[i].second) * S});
  }
  return rel;
}

std::vector<KetRelation> t_relations(const TransformTag& tag) {
  using namespace kets;
  const KetOp Rinv = metric_inverse_ket(tag);
  const int eta = tag.sign;
  const KetOp n2_minus_n = diagonal(
      [eta](const FockState& st) { return double(st.n2 - st.n1 + eta * st.s); });
  std::vector<KetRelation> rel = {
      {"a1 R = R a1 a2", a1() * Rinv, Rinv * a1() * a2()},
      {"a1+ R a2 = R a1+", a1_dag() * Rinv * a2(), Rinv * a1_dag()},
      {"a2 R = R a2", a2() * Rinv, Rinv * a2()},
      {"a2+ R a2 = R (N2 - n)", a2_dag() * Rinv * a2(), Rinv * n2_minus_n},
  };
  if (eta > 0) {
    rel.push_back({"sigma+ R = R sigma+ a2", sigma_plus() * Rinv, Rinv * sigma_plus() * a2()});
    rel.push_back({"sigma- R a2 = R sigma-", sigma_minus() * Rinv * a2(), Rinv * sigma_minus()});
  } else {
    rel.push_back({"sigma+ R a2 = R sigma+", sigma_plus() * Rinv * a2(), Rinv * sigma_plus()});
    rel.push_back({"sigma- R = R sigma- a2", sigma_minus() * Rinv, Rinv * sigma_minus() * a2()});
  }
  const auto src = source_generators(tag.source());
  const PrimedForms f = primed_forms(tag);
  const auto names = f.named();
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string g(names[i].first);
    rel.push_back({g + " R = R " + g + "'", src[i] * Rinv, Rinv * as_ket_op(*names[i].second)});
  }

  // Tabulated rules, read with a2+ where the derivation has a2.
  const KetOp n_tab = diagonal([eta](const FockState& st) { return double(st.n1 + eta * st.s); });
  rel.push_back({"tabulated: a1 R = R a1 a2+", a1() * Rinv, Rinv * a1() * a2_dag(), true});
  rel.push_back({"tabulated: a1+ R a2+ = R a1+", a1_dag() * Rinv * a2_dag(), Rinv * a1_dag(), true});
  rel.push_back({"tabulated: a2+ R a2+ = R (a2+ a2+ + n)", a2_dag() * Rinv * a2_dag(),
                 Rinv * (a2_dag() * a2_dag() + n_tab), true});
  if (eta > 0) {
    rel.push_back({"tabulated: sigma+ R = R sigma+ a2+", sigma_plus() * Rinv,
                   Rinv * sigma_plus() * a2_dag(), true});
    rel.push_back({"tabulated: sigma- R a2+ = R sigma-", sigma_minus() * Rinv * a2_dag(),
                   Rinv * sigma_minus(), true});
  } else {
    rel.push_back({"tabulated: sigma+ R a2+ = R sigma+", sigma_plus() * Rinv * a2_dag(),
                   Rinv * sigma_plus(), true});
    rel.push_back({"tabulated: sigma- R = R sigma- a2+", sigma_minus() * Rinv,
                   Rinv * sigma_minus() * a2_dag(), true});
  }
  return rel;
}

}  // namespace

AlgebraReport verify_intertwining(const FockSpace& space, const TransformTag& tag, double tol) {
  AlgebraReport rep;
  rep.subject = "intertwining:" + to_string(tag);
  rep.cutoffs = std::array<int, 2>{space.cutoff1(), space.cutoff2()};
  rep.tolerance = tol;
  const auto rel = tag.metric == Metric::S ? s_relations(tag) : t_relations(tag);
  for (const auto& r : rel) rep.relations.push_back(check_columns(r, space, tol));
  return rep;
}

AlgebraReport verify_unfixed_algebra(const FockSpace& space, const TransformTag& tag,
                                     int interior_margin, double tol) {
  const PrimedForms f = primed_forms(tag);
  const GeneratorSet<double> g{
      realize_on_fock(f.Jp, space), realize_on_fock(f.Jm, space), realize_on_fock(f.J0, space),
      realize_on_fock(f.J, space),  realize_on_fock(f.Vp, space), realize_on_fock(f.Vm, space),
      realize_on_fock(f.Wp, space), realize_on_fock(f.Wm, space), realize_on_fock(f.N, space),
      tag,
  };
  AlgebraReport rep;
  rep.subject = "unfixed:" + to_string(tag);
  rep.margin = interior_margin;
  rep.cutoffs = std::array<int, 2>{space.cutoff1(), space.cutoff2()};
  rep.tolerance = tol;
  rep.append(check_structure_relations(g, space.interior_mask(interior_margin), tol));
  rep.append(check_grading(g));
  return rep;
}

}  // namespace osp21

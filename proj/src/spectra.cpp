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

#include "osp21/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

#include "osp21/algebra.hpp"
#include "osp21/ladder.hpp"
#include "osp21/transform.hpp"

namespace osp21 {

namespace {

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite parameter");
  }
}

void require_j(int j, const char* what) {
  if (j < 1) throw std::invalid_argument(std::string(what) + ": j must be >= 1");
}

double frobenius(const Operator<double>& a, const std::vector<bool>& columns) {
  double s = 0.0;
  const auto& m = a.matrix();
  for (Eigen::Index k = 0; k < m.outerSize(); ++k) {
    if (!columns[static_cast<std::size_t>(k)]) continue;
    for (Operator<double>::SparseMatrix::InnerIterator it(m, k); it; ++it) s += it.value() * it.value();
  }
  return std::sqrt(s);
}

EmbeddingReport embedding(const FockSpace& space, const Operator<double>& direct,
                          Operator<double> algebraic) {
  EmbeddingReport rep{std::move(algebraic), Operator<double>(space)};
  rep.delta = (direct - rep.algebraic).pruned();
  const auto mask = space.interior_mask(rep.margin);
  rep.max_abs = max_abs(rep.delta, mask);
  rep.frobenius = frobenius(rep.delta, mask);
  return rep;
}

bool contains(const std::vector<double>& values, double v, double abs_tol, double rel_tol) {
  return std::any_of(values.begin(), values.end(), [&](double x) {
    return std::abs(x - v) <= abs_tol + rel_tol * std::abs(v);
  });
}

std::vector<double> real_sorted(const Spectrum& s) {
  auto r = s.real_parts();
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

void validate(const JCKerrParams& p) {
  require_finite({p.omega, p.omega0, p.kappa, p.lambda}, "JCKerrParams");
}

void validate(const MJCParams& p) {
  require_finite({p.omega, p.omega0, p.lambda1, p.lambda2}, "MJCParams");
}

// ---------------------------------------------------------------------------

Operator<double> build_jck_full(const FockSpace& space, const JCKerrParams& p) {
  validate(p);
  const auto n1 = make_number(space, Mode::one);
  const auto a = make_boson(space, Mode::one, Ladder::annihilate);
  const auto ad = make_boson(space, Mode::one, Ladder::create);
  const auto sp = make_fermion(space, FermionOp::sigma_plus);
  const auto sm = make_fermion(space, FermionOp::sigma_minus);
  const auto s0 = make_fermion(space, FermionOp::sigma_zero);
  return (p.omega * n1 + (0.5 * p.omega0) * s0 + p.kappa * (ad * sm + a * sp) +
          p.lambda * (n1 * n1))
      .pruned();
}

EmbeddingReport build_jck_algebraic(const FockSpace& space, const JCKerrParams& p,
                                    RealizationKind realization) {
  validate(p);
  const auto g = build_generators(space, realization);
  const auto id = Operator<double>::identity(space);
  const auto field = 2.0 * g.J0 + g.N;
  auto h = p.omega * field + (0.5 * p.omega0) * (g.J - g.N - g.J0 - id) +
           p.lambda * (field * field) + p.kappa * (g.Wp - g.Vm);
  return embedding(space, build_jck_full(space, p), h.pruned());
}

SpinorBasis jck_sector_basis(int j) {
  require_j(j, "jck_sector_basis");
  return SpinorBasis(j, j, j - 1);
}

ReducedPieces jck_reduced_pieces(int j) {
  ReducedPieces out{jck_sector_basis(j), {}, 0};
  const auto& basis = out.basis;
  const auto euler = realize(SpinorDiffOp().same(1, 1, 2, 2, 0).same(0, 0, 1, 1, -1), basis);
  const auto sigma0 = realize(SpinorDiffOp().same(0, 0, 1, -1, 0), basis);
  const auto kerr = realize(SpinorDiffOp().same(1, 1, 2, 2, 0).same(0, 0, 2, 0, -1), basis);
  int leaks = 0;
  const auto coupling = realize(SpinorDiffOp().lower(1, 0, 1, 0).raise(0, 1, 1, 0), basis, &leaks);
  out.leaks = leaks;
  out.pieces = {{"omega+omega0", euler},
                {"omega-omega0", sigma0},
                {"lambda", kerr * kerr},
                {"kappa", coupling}};
  return out;
}

Operator<double> build_jck_reduced(int j, const JCKerrParams& p) {
  validate(p);
  const auto r = jck_reduced_pieces(j);
  const double coeff[] = {p.omega + p.omega0, p.omega - p.omega0, p.lambda, p.kappa};
  Operator<double> h(r.basis);
  for (std::size_t i = 0; i < r.pieces.size(); ++i) {
    h = h + coeff[i] * cast_to_double(r.pieces[i].second);
  }
  return h.pruned();
}

Operator<double> build_jck_image(int j, const JCKerrParams& p) {
  validate(p);
  const SpinorBasis basis = basis_for({Metric::S, 1}, j);
  const Rational h(1, 2);
  const auto number = realize(SpinorDiffOp().same(1, 1, 1, 1, 0), basis);
  const auto atom = realize(SpinorDiffOp().same(0, 0, h, -h, 0), basis);
  const auto hop = realize(SpinorDiffOp().lower(1, 0, 1, 0).raise(0, 1, 1, 0), basis);
  return (p.omega * cast_to_double(number) + p.omega0 * cast_to_double(atom) +
          p.kappa * cast_to_double(hop) + p.lambda * cast_to_double(number * number))
      .pruned();
}

namespace {

double jck_diag_u(int j, int k, const JCKerrParams& p) {
  const double t = 2.0 * k + 2 - j;
  return (p.omega + p.omega0) * (2.0 * k + 1 - j) + p.omega - p.omega0 + p.lambda * t * t;
}

double jck_diag_v(int j, int k, const JCKerrParams& p) {
  const double t = 2.0 * k - j;
  return (p.omega + p.omega0) * (2.0 * k + 1 - j) - p.omega + p.omega0 + p.lambda * t * t;
}

using Poly = std::vector<double>;  // ascending powers

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i + k] += a[i] * b[k];
  }
  return out;
}

Poly poly_axpy(double c, const Poly& x, const Poly& y) {
  Poly out(std::max(x.size(), y.size()), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += c * x[i];
  for (std::size_t i = 0; i < y.size(); ++i) out[i] += y[i];
  return out;
}

std::complex<double> poly_eval(const Poly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Roots through the companion matrix; empty optional if the leading
// coefficient is unusable.
std::optional<std::vector<std::complex<double>>> companion_roots(const Poly& p) {
  const auto deg = static_cast<Eigen::Index>(p.size()) - 1;
  const double lead = p.back();
  if (!std::isfinite(lead) || std::abs(lead) < 1e-300) return std::nullopt;
  for (double c : p) {
    if (!std::isfinite(c)) return std::nullopt;
  }
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) c(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) c(i, deg - 1) = -p[static_cast<std::size_t>(i)] / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
  if (es.info() != Eigen::Success) return std::nullopt;
  std::vector<std::complex<double>> roots;
  for (Eigen::Index i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()(i));
  return roots;
}

struct ChainLink {
  std::string label;
  double diag = 0.0;
  double beta = 0.0;  // product of the couplings to the previous link
};

std::vector<ChainLink> jck_chain(int j, const JCKerrParams& p) {
  std::vector<ChainLink> chain;
  for (int k = 0; k <= j; ++k) {
    if (k <= j - 1) {
      // v_k couples to u_{k-1} (x sigma_-, coefficient kappa) and back (d sigma_+, kappa k).
      const double beta = k >= 1 ? p.kappa * p.kappa * k : 0.0;
      chain.push_back({"v" + std::to_string(k), jck_diag_v(j, k, p), beta});
    }
    chain.push_back({"u" + std::to_string(k), jck_diag_u(j, k, p), 0.0});
  }
  return chain;
}

}  // namespace

Spectrum jck_recurrence(int j, const JCKerrParams& p) {
  require_j(j, "jck_recurrence");
  validate(p);
  const auto chain = jck_chain(j, p);
  Spectrum out;
  out.provenance = Provenance::recurrence;

  // P_k = (d_k - E) P_{k-1} - beta_k P_{k-2}, restarted where beta_k = 0.
  Poly prev2{1.0};
  Poly prev{1.0};
  auto flush = [&](const Poly& poly) {
    if (poly.size() < 2) return true;
    const auto roots = companion_roots(poly);
    if (!roots) return false;
    for (const auto& r : *roots) {
      out.eigenvalues.push_back(r);
      out.residuals.push_back(std::abs(poly_eval(poly, r)));
    }
    return true;
  };
  bool ok = true;
  for (const auto& link : chain) {
    const Poly factor{link.diag, -1.0};
    if (link.beta == 0.0) {
      ok = ok && flush(prev);
      prev2 = {1.0};
      prev = factor;
      continue;
    }
    Poly next = poly_mul(factor, prev);
    next = poly_axpy(-link.beta, prev2, next);
    prev2 = prev;
    prev = next;
  }
  ok = ok && flush(prev);

  if (!ok) {
    Spectrum dense = eigen_dense(build_jck_reduced(j, p));
    dense.warnings.push_back("recurrence: degenerate leading coefficient; dense sector fallback");
    return dense;
  }
  std::vector<std::size_t> order(out.eigenvalues.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = out.eigenvalues[a];
    const auto& y = out.eigenvalues[b];
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  Spectrum sorted;
  sorted.provenance = Provenance::recurrence;
  for (auto i : order) {
    sorted.eigenvalues.push_back(out.eigenvalues[i]);
    sorted.residuals.push_back(out.residuals[i]);
  }
  return sorted;
}

RecurrenceDiff jck_recurrence_diff(int j, const JCKerrParams& p) {
  require_j(j, "jck_recurrence_diff");
  validate(p);
  RecurrenceDiff d;
  d.j = j;
  d.params = p;
  const double w = p.omega;
  const double w0 = p.omega0;
  const double l = p.lambda;
  const SpinorBasis basis = jck_sector_basis(j);
  Eigen::MatrixXd printed = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  auto u_at = [&](int k) { return *basis.find({Component::upper, k}); };
  auto v_at = [&](int k) { return *basis.find({Component::lower, k}); };

  for (int n = 0; n <= j; ++n) {
    RecurrenceRow r;
    r.label = "u" + std::to_string(n);
    r.derived_diag = jck_diag_u(j, n, p);
    const double t = j - 2.0 * (n + 1);
    r.printed_diag = 2 * w - (w + w0) * (j - 2.0 * n) + l * t * t;
    if (n + 1 <= j - 1) {
      r.derived_partner = "v" + std::to_string(n + 1);
      r.derived_coupling = p.kappa * (n + 1);
    }
    if (n <= j - 1) {  // m v_{m-1} with m = n + 1
      r.printed_partner = "v" + std::to_string(n);
      r.printed_coupling = p.kappa * (n + 1);
      printed(u_at(n), v_at(n)) = r.printed_coupling;
    }
    printed(u_at(n), u_at(n)) = r.printed_diag;
    d.rows.push_back(r);
  }
  for (int m = 0; m <= j - 1; ++m) {
    RecurrenceRow r;
    r.label = "v" + std::to_string(m);
    r.derived_diag = jck_diag_v(j, m, p);
    r.printed_diag = -(j - 2.0 * m) * (w - l * (j - m)) - (j - 2.0 * m - 2) * w0;
    if (m >= 1) {
      r.derived_partner = "u" + std::to_string(m - 1);
      r.derived_coupling = p.kappa;
    }
    // kappa u_{n+1} with n + 1 = m
    r.printed_partner = "u" + std::to_string(m);
    r.printed_coupling = p.kappa;
    printed(v_at(m), u_at(m)) = r.printed_coupling;
    printed(v_at(m), v_at(m)) = r.printed_diag;
    d.rows.push_back(r);
  }
  for (const auto& r : d.rows) {
    d.max_diag_diff = std::max(d.max_diag_diff, std::abs(r.derived_diag - r.printed_diag));
    if (r.derived_partner != r.printed_partner) ++d.partner_mismatches;
  }
  d.printed_roots = eigen_dense(printed).eigenvalues;
  return d;
}

std::vector<LabeledValue> jck_printed_values(int j, const JCKerrParams& p) {
  const double w = p.omega;
  const double w0 = p.omega0;
  const double l = p.lambda;
  const double k = p.kappa;
  if (j == 1) {
    return {{"9lambda+3omega+omega0", 9 * l + 3 * w + w0}, {"lambda-omega+omega0", l - w + w0}};
  }
  if (j == 2) {
    const double root = std::sqrt(k * k + std::pow(3 * w + 6 * l + w0, 2));
    return {{"2omega0", 2 * w0},
            {"2(omega+2lambda)", 2 * (w + 2 * l)},
            {"omega+10lambda+omega0+sqrt", w + 10 * l + w0 + root},
            {"omega+10lambda+omega0-sqrt", w + 10 * l + w0 - root}};
  }
  return {};
}

// ---------------------------------------------------------------------------

Operator<double> build_mjc_full(const FockSpace& space, const MJCParams& p) {
  validate(p);
  const auto n = make_number(space, Mode::one) + make_number(space, Mode::two);
  const auto a1 = make_boson(space, Mode::one, Ladder::annihilate);
  const auto a1d = make_boson(space, Mode::one, Ladder::create);
  const auto a2 = make_boson(space, Mode::two, Ladder::annihilate);
  const auto a2d = make_boson(space, Mode::two, Ladder::create);
  const auto sp = make_fermion(space, FermionOp::sigma_plus);
  const auto sm = make_fermion(space, FermionOp::sigma_minus);
  const auto s0 = make_fermion(space, FermionOp::sigma_zero);
  return (p.omega * n + (0.5 * p.omega0) * s0 + p.lambda1 * (a1 * sp + a1d * sm) +
          p.lambda2 * (a2 * sp + a2d * sm))
      .pruned();
}

EmbeddingReport build_mjc_algebraic(const FockSpace& space, const MJCParams& p,
                                    RealizationKind realization) {
  validate(p);
  const auto g = build_generators(space, realization);
  const auto id = Operator<double>::identity(space);
  auto h = p.omega * g.N + (0.5 * p.omega0) * (g.J - id - 0.5 * g.N) +
           p.lambda1 * (g.Wp - g.Vm) + p.lambda2 * (g.Wm + g.Vp);
  return embedding(space, build_mjc_full(space, p), h.pruned());
}

SpinorBasis mjc_sector_basis(int j) {
  require_j(j, "mjc_sector_basis");
  return SpinorBasis(j, j - 1, j);
}

Operator<double> build_mjc_reduced(int j, const MJCParams& p) {
  validate(p);
  const SpinorBasis basis = mjc_sector_basis(j);
  const Rational h(1, 2);
  const auto field = realize(SpinorDiffOp().same(0, 0, -2, 0, 1), basis);  // j - 1 - sigma_0
  const auto atom = realize(SpinorDiffOp().same(0, 0, h, -h, 0), basis);  // sigma_0 / 2
  const auto c1 = realize(SpinorDiffOp().lower(1, 0, 1, 0).raise(0, 1, 1, 0), basis);
  const auto c2 =
      realize(SpinorDiffOp().lower(0, 0, 1, 0).raise(1, 1, -1, 0).raise(0, 0, 0, 1), basis);
  return (p.omega * cast_to_double(field) + p.omega0 * cast_to_double(atom) +
          p.lambda1 * cast_to_double(c1) + p.lambda2 * cast_to_double(c2))
      .pruned();
}

Operator<double> build_mjc_image(int j, const MJCParams& p) {
  validate(p);
  const SpinorBasis basis = basis_for({Metric::S, 1}, j);
  const Rational h(1, 2);
  const auto number = realize(SpinorDiffOp().same(0, 0, -1, 0, 1), basis);  // j - s
  const auto atom = realize(SpinorDiffOp().same(0, 0, h, -h, 0), basis);
  const auto c1 = realize(SpinorDiffOp().lower(1, 0, 1, 0).raise(0, 1, 1, 0), basis);
  const auto c2 =
      realize(SpinorDiffOp().lower(0, 0, 1, 0).raise(1, 1, -1, 0).raise(0, 0, 0, 1), basis);
  return (p.omega * cast_to_double(number) + p.omega0 * cast_to_double(atom) +
          p.lambda1 * cast_to_double(c1) + p.lambda2 * cast_to_double(c2))
      .pruned();
}

namespace {

Poly poly_pow(const Poly& base, int e) {
  Poly out{1.0};
  for (int k = 0; k < e; ++k) out = poly_mul(out, base);
  return out;
}

Poly resized(Poly p, std::size_t n) {
  p.resize(std::max(n, p.size()), 0.0);
  return p;
}

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = static_cast<double>(k) * p[k];
  return out;
}

Poly times_x(const Poly& p) {
  Poly out(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) out[k + 1] = p[k];
  return out;
}

double inf_norm(const Poly& p) {
  double m = 0.0;
  for (double c : p) m = std::max(m, std::abs(c));
  return m;
}

double dot(const Poly& a, const Poly& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) s += a[k] * b[k];
  return s;
}

struct SpinorPoly {
  Poly upper;
  Poly lower;
};

// The reduced two-mode operator applied directly to polynomials.
SpinorPoly apply_mjc(const SpinorPoly& in, int j, const MJCParams& p) {
  const Poly& u = in.upper;
  const Poly& v = in.lower;
  const Poly dv = derivative(v);
  SpinorPoly out;
  out.upper = poly_axpy(p.omega * (j - 2) + 0.5 * p.omega0, u, Poly{0.0});
  out.upper = poly_axpy(p.lambda1, dv, out.upper);
  out.upper = poly_axpy(-p.lambda2, times_x(dv), out.upper);
  out.upper = poly_axpy(p.lambda2 * j, v, out.upper);
  out.lower = poly_axpy(p.omega * j - 0.5 * p.omega0, v, Poly{0.0});
  out.lower = poly_axpy(p.lambda1, times_x(u), out.lower);
  out.lower = poly_axpy(p.lambda2, u, out.lower);
  return out;
}

// Coefficient c minimizing ||y - c x||_2 and the leftover ||y - c x||_inf / max(1, ||y||_inf).
std::pair<double, double> project(const Poly& y, const Poly& x) {
  const std::size_t n = std::max(x.size(), y.size());
  const Poly xs = resized(x, n);
  const Poly ys = resized(y, n);
  const double xx = dot(xs, xs);
  const double c = xx > 0 ? dot(ys, xs) / xx : 0.0;
  const Poly r = poly_axpy(-c, xs, ys);
  return {c, inf_norm(r) / std::max(1.0, inf_norm(ys))};
}

MJCBranch make_branch(double c2, double energy, const Poly& upper, const Poly& lower, int j,
                      const MJCParams& p, double tol) {
  MJCBranch b;
  b.c2 = c2;
  b.energy = energy;
  SpinorPoly phi{resized(poly_axpy(c2, upper, Poly{0.0}), static_cast<std::size_t>(j)),
                 resized(lower, static_cast<std::size_t>(j + 1))};
  const SpinorPoly h = apply_mjc(phi, j, p);
  const Poly ru = poly_axpy(-energy, resized(phi.upper, h.upper.size()), h.upper);
  const Poly rl = poly_axpy(-energy, resized(phi.lower, h.lower.size()), h.lower);
  const double norm = std::max(inf_norm(phi.upper), inf_norm(phi.lower));
  b.residual = std::max(inf_norm(ru), inf_norm(rl)) / norm;
  b.accepted = std::isfinite(b.residual) && b.residual < tol;
  b.phi.upper = phi.upper;
  b.phi.lower = phi.lower;
  return b;
}

}  // namespace

double mjc_printed_eigenvalue(int j, int n, const MJCParams& p, int sign) {
  const double big = p.lambda1 * p.lambda1 + p.lambda2 * p.lambda2;
  const double root = std::sqrt(std::pow(p.omega0 - 2 * p.omega, 2) + 4.0 * n * big);
  return p.omega * (j - 1) + (sign > 0 ? root : -root);
}

MJCClosedForm mjc_closed_form(int j, int n, const MJCParams& p, double tol) {
  require_j(j, "mjc_closed_form");
  validate(p);
  if (n < 0 || n > j) throw std::invalid_argument("mjc_closed_form: need 0 <= n <= j");
  if (p.lambda1 == 0.0 && p.lambda2 == 0.0) {
    throw std::invalid_argument("mjc_closed_form: lambda1 and lambda2 both zero");
  }
  MJCClosedForm out;
  out.j = j;
  out.n = n;
  out.printed = {mjc_printed_eigenvalue(j, n, p, -1), mjc_printed_eigenvalue(j, n, p, +1)};

  const Poly g{p.lambda2, p.lambda1};
  const Poly h{p.lambda1, -p.lambda2};
  const Poly lower = poly_mul(poly_pow(g, n), poly_pow(h, j - n));

  // Image of (0, lower): upper part must be a multiple of the trial upper
  // polynomial, lower part a multiple of `lower`.
  const SpinorPoly a = apply_mjc({Poly(static_cast<std::size_t>(j), 0.0), lower}, j, p);
  const auto [delta, rd] = project(a.lower, lower);

  if (n == 0) {
    out.upper_zero = true;
    out.projection_residual = std::max(rd, inf_norm(a.upper) / std::max(1.0, inf_norm(lower)));
    out.branches.push_back(make_branch(0.0, delta, Poly{0.0}, lower, j, p, tol));
    return out;
  }

  const Poly upper = poly_mul(poly_pow(g, n - 1), poly_pow(h, j - n));
  const SpinorPoly b = apply_mjc({upper, Poly(static_cast<std::size_t>(j + 1), 0.0)}, j, p);
  const auto [alpha, ra] = project(b.upper, upper);
  const auto [beta, rb] = project(b.lower, lower);
  const auto [gamma, rg] = project(a.upper, upper);
  out.projection_residual = std::max({ra, rb, rg, rd});

  // upper: C2 alpha + gamma = E C2;  lower: C2 beta + delta = E
  //   => beta C2^2 + (delta - alpha) C2 - gamma = 0
  std::vector<double> roots;
  if (std::abs(beta) < 1e-14) {
    if (std::abs(alpha - delta) > 1e-300) roots.push_back(gamma / (alpha - delta));
  } else {
    const double bq = delta - alpha;
    const double disc = bq * bq + 4.0 * beta * gamma;
    if (disc < 0.0) {
      out.consistent = false;
      roots.push_back(-bq / (2.0 * beta));
    } else {
      const double sq = std::sqrt(disc);
      // Stable pair of roots.
      const double q = -0.5 * (bq + (bq >= 0 ? sq : -sq));
      if (q != 0.0) {
        roots.push_back(q / beta);
        roots.push_back(-gamma / q);
      } else {
        roots.push_back(0.0);
        roots.push_back(0.0);
      }
    }
  }
  for (double c2 : roots) {
    out.branches.push_back(make_branch(c2, beta * c2 + delta, upper, lower, j, p, tol));
  }
  std::sort(out.branches.begin(), out.branches.end(),
            [](const MJCBranch& x, const MJCBranch& y) { return x.energy < y.energy; });
  if (out.projection_residual > tol) out.consistent = false;
  return out;
}

Spectrum mjc_closed_form_spectrum(int j, const MJCParams& p, double tol) {
  Spectrum s;
  s.provenance = Provenance::closed_form;
  std::vector<std::pair<double, double>> vals;
  for (int n = 0; n <= j; ++n) {
    const auto cf = mjc_closed_form(j, n, p, tol);
    for (const auto& b : cf.branches) {
      if (b.accepted) {
        vals.emplace_back(b.energy, b.residual);
      } else {
        s.warnings.push_back("closed form: branch n=" + std::to_string(n) +
                             " rejected, residual " + std::to_string(b.residual));
      }
    }
  }
  std::sort(vals.begin(), vals.end());
  for (const auto& [e, r] : vals) {
    s.eigenvalues.emplace_back(e, 0.0);
    s.residuals.push_back(r);
  }
  return s;
}

// ---------------------------------------------------------------------------

MatchResult match_multiset(std::vector<double> reference, std::vector<double> candidates,
                           double abs_tol, double rel_tol) {
  std::sort(reference.begin(), reference.end());
  std::vector<bool> used(candidates.size(), false);
  MatchResult out;
  for (double r : reference) {
    std::size_t best = candidates.size();
    double best_diff = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(candidates[i] - r);
      if (best == candidates.size() || d < best_diff) {
        best = i;
        best_diff = d;
      }
    }
    if (best < candidates.size() && best_diff <= abs_tol + rel_tol * std::abs(r)) {
      used[best] = true;
      out.matched.push_back({r, candidates[best], best_diff});
    } else {
      out.unmatched_reference.push_back(r);
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!used[i]) out.unmatched_candidates.push_back(candidates[i]);
  }
  std::sort(out.unmatched_candidates.begin(), out.unmatched_candidates.end());
  return out;
}

std::vector<double> block_spectra(const Operator<double>& h,
                                  const std::function<std::optional<int>(const FockState&)>& label,
                                  const std::function<bool(int)>& complete) {
  const auto& space = std::get<FockSpace>(h.domain());
  std::map<int, std::vector<Eigen::Index>> blocks;
  for (Eigen::Index i = 0; i < space.dim(); ++i) {
    if (const auto l = label(space.state(i))) blocks[*l].push_back(i);
  }
  const Eigen::MatrixXd dense = h.to_dense();
  std::vector<double> out;
  for (const auto& [l, idx] : blocks) {
    if (!complete(l)) continue;
    const auto n = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) b(r, c) = dense(idx[r], idx[c]);
    }
    for (double e : eigen_dense(b).real_parts()) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> jck_full_spectrum(const FockSpace& space, const JCKerrParams& p) {
  return block_spectra(
      build_jck_full(space, p),
      [](const FockState& st) -> std::optional<int> {
        if (st.n2 != 0) return std::nullopt;
        return st.n1 + st.s;
      },
      [&](int m) { return m <= space.cutoff1(); });
}

std::vector<double> mjc_full_spectrum(const FockSpace& space, const MJCParams& p) {
  const int top = std::min(space.cutoff1(), space.cutoff2());
  return block_spectra(
      build_mjc_full(space, p),
      [](const FockState& st) -> std::optional<int> { return st.n1 + st.n2 + st.s; },
      [top](int m) { return m <= top; });
}

std::string to_string(Model m) { return m == Model::jck ? "jck" : "mjc"; }

Model parse_model(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "jck") return Model::jck;
  if (t == "mjc") return Model::mjc;
  throw std::invalid_argument("unknown model '" + s + "' (expected jck or mjc)");
}

namespace {

void require_room(int j, const FockSpace& space) {
  if (space.cutoff1() < j + 4 || space.cutoff2() < j + 4) {
    throw std::invalid_argument("compare: cutoffs must be >= j + 4 (j = " + std::to_string(j) +
                                ")");
  }
}

}  // namespace

ComparisonReport compare_reduced_vs_full(int j, const JCKerrParams& p, const FockSpace& space,
                                         double abs_tol, double rel_tol) {
  require_j(j, "compare");
  require_room(j, space);
  ComparisonReport rep;
  rep.model = Model::jck;
  rep.j = j;
  rep.cutoffs = {space.cutoff1(), space.cutoff2()};
  rep.reduced = real_sorted(eigen_dense(build_jck_reduced(j, p)));
  rep.full = jck_full_spectrum(space, p);
  rep.reduced_in_full = match_multiset(rep.reduced, rep.full, abs_tol, rel_tol);
  rep.image = real_sorted(eigen_dense(build_jck_image(j, p)));
  rep.image_in_full = match_multiset(rep.image, rep.full, abs_tol, rel_tol);
  for (const auto& v : jck_printed_values(j, p)) {
    rep.printed.push_back({v.label, v.value, contains(rep.reduced, v.value, abs_tol, rel_tol),
                           contains(rep.full, v.value, abs_tol, rel_tol)});
  }
  const auto emb = build_jck_algebraic(space, p);
  rep.embedding_max_abs = emb.max_abs;
  rep.embedding_frobenius = emb.frobenius;
  return rep;
}

ComparisonReport compare_reduced_vs_full(int j, const MJCParams& p, const FockSpace& space,
                                         double abs_tol, double rel_tol) {
  require_j(j, "compare");
  require_room(j, space);
  ComparisonReport rep;
  rep.model = Model::mjc;
  rep.j = j;
  rep.cutoffs = {space.cutoff1(), space.cutoff2()};
  rep.reduced = real_sorted(mjc_closed_form_spectrum(j, p));
  rep.full = mjc_full_spectrum(space, p);
  rep.reduced_in_full = match_multiset(rep.reduced, rep.full, abs_tol, rel_tol);
  rep.image = real_sorted(eigen_dense(build_mjc_image(j, p)));
  rep.image_in_full = match_multiset(rep.image, rep.full, abs_tol, rel_tol);
  for (int n = 0; n <= j; ++n) {
    for (int sign : {-1, 1}) {
      const double v = mjc_printed_eigenvalue(j, n, p, sign);
      rep.printed.push_back({"n=" + std::to_string(n) + (sign > 0 ? ",+" : ",-"), v,
                             contains(rep.reduced, v, abs_tol, rel_tol),
                             contains(rep.full, v, abs_tol, rel_tol)});
    }
  }
  const auto emb = build_mjc_algebraic(space, p);
  rep.embedding_max_abs = emb.max_abs;
  rep.embedding_frobenius = emb.frobenius;
  return rep;
}

}  // namespace osp21

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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osp21/eigen_dense.hpp"
#include "osp21/operator.hpp"
#include "osp21/realization.hpp"
#include "osp21/spinor_basis.hpp"

namespace osp21 {

/// H = omega a+a + omega0/2 sigma_0 + kappa (a+ sigma_- + a sigma_+) + lambda (a+a)^2
struct JCKerrParams {
  double omega = 1.0;
  double omega0 = 0.5;
  double kappa = 0.2;
  double lambda = 0.1;
};

/// H = omega (n1 + n2) + omega0/2 sigma_0 + lambda1 (a1 sigma_+ + a1+ sigma_-)
///     + lambda2 (a2 sigma_+ + a2+ sigma_-)
struct MJCParams {
  double omega = 1.0;
  double omega0 = 1.0;
  double lambda1 = 0.3;
  double lambda2 = 0.4;
};

/// Throws std::invalid_argument on non-finite entries.
void validate(const JCKerrParams& p);
void validate(const MJCParams& p);

// ---------------------------------------------------------------------------
// Jaynes-Cummings with Kerr term

/// Mode 1 is the field; mode 2 is a spectator.
Operator<double> build_jck_full(const FockSpace& space, const JCKerrParams& p);

/// An operator assembled from generators next to the direct Hamiltonian.
struct EmbeddingReport {
  Operator<double> algebraic;
  /// direct - algebraic
  Operator<double> delta;
  int margin = 2;
  /// Over interior columns.
  double max_abs = 0.0;
  double frobenius = 0.0;
};

/// omega (2J0 + N) + omega0/2 (J - N - J0 - 1) + lambda (2J0 + N)^2 + kappa (W+ - V-).
EmbeddingReport build_jck_algebraic(const FockSpace& space, const JCKerrParams& p,
                                    RealizationKind realization = RealizationKind::ferm_a);

/// Upper degrees 0..j, lower 0..j-1.
SpinorBasis jck_sector_basis(int j);

/// Parameter-free exact pieces of the one-variable operator
///   (omega + omega0)(2x d + 1 - j) + (omega - omega0) sigma_0
///   + lambda (2x d + 1 + sigma_0 - j)^2 + kappa (x sigma_- + d sigma_+)
/// on jck_sector_basis(j). `leaks` counts images cut off by the basis.
struct ReducedPieces {
  SpinorBasis basis;
  std::vector<std::pair<std::string, Operator<Rational>>> pieces;
  int leaks = 0;
};

ReducedPieces jck_reduced_pieces(int j);
Operator<double> build_jck_reduced(int j, const JCKerrParams& p);

/// Roots of the energy polynomials. The sector is tridiagonal in the order
/// v0, u0, v1, u1, ..., v_{j-1}, u_{j-1}, u_j; the three-term recurrence is
/// split wherever the coupling product vanishes and each factor is solved
/// through its companion matrix.
/// The one-mode operator itself pushed through the derived s+1 forms,
/// on basis_for(s+1, j). Its spectrum sits inside the Fock one.
Operator<double> build_jck_image(int j, const JCKerrParams& p);

Spectrum jck_recurrence(int j, const JCKerrParams& p);

/// Coefficients of the recurrence row for one basis monomial, worked out from
/// the one-variable operator and as tabulated (coupling partner read with
/// m = n + 1).
struct RecurrenceRow {
  std::string label;  // "u3", "v1"
  double derived_diag = 0.0;
  double printed_diag = 0.0;
  std::string derived_partner;  // empty when the partner lies outside the basis
  double derived_coupling = 0.0;
  std::string printed_partner;
  double printed_coupling = 0.0;
};

struct RecurrenceDiff {
  int j = 0;
  JCKerrParams params;
  std::vector<RecurrenceRow> rows;
  double max_diag_diff = 0.0;
  int partner_mismatches = 0;
  /// Spectrum of the sector matrix rebuilt from the tabulated rows.
  std::vector<std::complex<double>> printed_roots;
};

RecurrenceDiff jck_recurrence_diff(int j, const JCKerrParams& p);

struct LabeledValue {
  std::string label;
  double value = 0.0;
};

/// Tabulated sector eigenvalues (j = 1 and j = 2 only; empty otherwise).
std::vector<LabeledValue> jck_printed_values(int j, const JCKerrParams& p);

// ---------------------------------------------------------------------------
// Modified Jaynes-Cummings (two modes)

Operator<double> build_mjc_full(const FockSpace& space, const MJCParams& p);

/// omega N + omega0/2 (J - 1 - N/2) + lambda1 (W+ - V-) + lambda2 (W- + V+).
EmbeddingReport build_mjc_algebraic(const FockSpace& space, const MJCParams& p,
                                    RealizationKind realization = RealizationKind::ferm_a);

/// Upper degrees 0..j-1, lower 0..j; invariant under the operator.
SpinorBasis mjc_sector_basis(int j);

/// omega (j - 1 - sigma_0) + omega0/2 sigma_0 + lambda1 (x sigma_- + d sigma_+)
///   + lambda2 (sigma_- - (x d - j) sigma_+)
Operator<double> build_mjc_reduced(int j, const MJCParams& p);

/// Same idea as build_jck_image for the two-mode operator.
Operator<double> build_mjc_image(int j, const MJCParams& p);

/// One eigen-branch from substituting the trial spinor
///   lower = (l2 + l1 x)^n (l1 - l2 x)^(j-n),  upper = C2 (l2 + l1 x)^(n-1) (l1 - l2 x)^(j-n)
/// with C1 = 1. At n = 0 the upper part is taken to be zero.
struct MJCBranch {
  double c2 = 0.0;
  double energy = 0.0;
  PolySpinor phi;
  /// ||H phi - E phi||_inf / ||phi||_inf
  double residual = 0.0;
  bool accepted = false;
};

struct MJCClosedForm {
  int j = 0;
  int n = 0;
  bool upper_zero = false;
  /// Mismatch of the projection onto the trial upper polynomial.
  double projection_residual = 0.0;
  bool consistent = true;
  std::vector<MJCBranch> branches;  // ascending energy
  /// Tabulated omega (j-1) -/+ sqrt((omega0 - 2 omega)^2 + 4 n (l1^2 + l2^2)).
  std::array<double, 2> printed{};
};

MJCClosedForm mjc_closed_form(int j, int n, const MJCParams& p, double tol = 1e-10);

/// All accepted substitution eigenvalues for n = 0..j, provenance closed_form;
/// residuals are the eigenfunction residuals.
Spectrum mjc_closed_form_spectrum(int j, const MJCParams& p, double tol = 1e-10);

double mjc_printed_eigenvalue(int j, int n, const MJCParams& p, int sign);

// ---------------------------------------------------------------------------
// Matching and cross-picture audits

struct MatchPair {
  double reference = 0.0;
  double found = 0.0;
  double diff = 0.0;
};

struct MatchResult {
  std::vector<MatchPair> matched;
  std::vector<double> unmatched_reference;
  std::vector<double> unmatched_candidates;
  bool all_found() const { return unmatched_reference.empty(); }
};

/// Greedy nearest-neighbour multiset matching of real parts, reference values
/// taken in ascending order. Tolerance abs_tol + rel_tol * |reference|.
MatchResult match_multiset(std::vector<double> reference, std::vector<double> candidates,
                           double abs_tol, double rel_tol);

/// Eigenvalues of the blocks of H labelled by `label` (states mapping to
/// nullopt are ignored). A block is used only if `complete(label)` holds.
std::vector<double> block_spectra(const Operator<double>& h,
                                  const std::function<std::optional<int>(const FockState&)>& label,
                                  const std::function<bool(int)>& complete);

/// Complete excitation blocks of the single-mode model (n2 = 0, n1 + s <= cutoff1).
std::vector<double> jck_full_spectrum(const FockSpace& space, const JCKerrParams& p);
/// Complete excitation blocks of the two-mode model (n1 + n2 + s <= min cutoff).
std::vector<double> mjc_full_spectrum(const FockSpace& space, const MJCParams& p);

enum class Model { jck, mjc };
std::string to_string(Model m);
Model parse_model(const std::string& s);

struct ComparisonReport {
  Model model = Model::jck;
  int j = 0;
  std::array<int, 2> cutoffs{};
  std::vector<double> reduced;
  std::vector<double> full;
  MatchResult reduced_in_full;
  /// Spectrum of build_*_image and its containment in `full`.
  std::vector<double> image;
  MatchResult image_in_full;
  /// Tabulated values and whether each sits in the reduced / full spectrum.
  struct Entry {
    std::string label;
    double value = 0.0;
    bool in_reduced = false;
    bool in_full = false;
  };
  std::vector<Entry> printed;
  double embedding_max_abs = 0.0;
  double embedding_frobenius = 0.0;
};

/// Requires cutoffs >= j + 4 (std::invalid_argument otherwise). For MJC the
/// reduced values are the accepted substitution eigenvalues.
ComparisonReport compare_reduced_vs_full(int j, const JCKerrParams& p, const FockSpace& space,
                                         double abs_tol = 1e-8, double rel_tol = 1e-8);
ComparisonReport compare_reduced_vs_full(int j, const MJCParams& p, const FockSpace& space,
                                         double abs_tol = 1e-8, double rel_tol = 1e-8);

}  // namespace osp21

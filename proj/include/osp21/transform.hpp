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

#include <string>
#include <vector>

#include "osp21/algebra.hpp"
#include "osp21/ket.hpp"
#include "osp21/operator.hpp"
#include "osp21/realization.hpp"
#include "osp21/spinor_basis.hpp"

namespace osp21 {

/// coefficient * x^x_power (d/dx)^d_power, mapping spinor component `from`
/// to `to`. The coefficient is affine in the sector label: constant + j_coeff * j.
struct DiffTerm {
  Component from = Component::upper;
  Component to = Component::upper;
  int x_power = 0;
  int d_power = 0;
  Rational constant = 0;
  Rational j_coeff = 0;
};

/// 2x2 matrix differential operator in one variable, with a1 = d/dx, a1+ = x.
/// sigma_+ maps the lower component to the upper one.
class SpinorDiffOp {
 public:
  const std::vector<DiffTerm>& terms() const { return terms_; }

  /// Diagonal term with separate upper/lower constants.
  SpinorDiffOp& same(int x_power, int d_power, Rational c_upper, Rational c_lower,
                     Rational j_coeff);
  /// sigma_+ times the term (lower -> upper).
  SpinorDiffOp& raise(int x_power, int d_power, Rational c, Rational j_coeff);
  /// sigma_- times the term (upper -> lower).
  SpinorDiffOp& lower(int x_power, int d_power, Rational c, Rational j_coeff);

 private:
  std::vector<DiffTerm> terms_;
};

/// Exact matrix of the operator on the basis (j taken from the basis). Output
/// monomials outside the basis are dropped and counted in `leaks`.
Operator<Rational> realize(const SpinorDiffOp& op, const SpinorBasis& basis, int* leaks = nullptr);

/// Same operator on the two-mode Fock space with j replaced by a2+a2 and
/// x^p d^q read as (a1+)^p a1^q. Truncated like every other Fock operator.
Operator<double> realize_on_fock(const SpinorDiffOp& op, const FockSpace& space);

/// Unbounded version of realize_on_fock.
KetOp as_ket_op(const SpinorDiffOp& op);

struct PrimedForms {
  SpinorDiffOp Jp, Jm, J0, J, Vp, Vm, Wp, Wm, N;

  std::array<std::pair<std::string_view, const SpinorDiffOp*>, 9> named() const {
    return {{{"J+", &Jp}, {"J-", &Jm}, {"J0", &J0}, {"J", &J},
             {"V+", &Vp}, {"V-", &Vm}, {"W+", &Wp}, {"W-", &Wm}, {"N", &N}}};
  }
};

/// `derived` are the conjugated generators worked out from the metric rules;
/// `printed` are the tabulated one-variable forms taken literally (generators
/// said to be unchanged from another table are copied from that table).
enum class FormSource { derived, printed };

std::string to_string(FormSource s);
FormSource parse_form_source(const std::string& s);

PrimedForms primed_forms(const TransformTag& tag, FormSource source = FormSource::derived);

/// Spinor basis the derived forms act on at sector j:
///   S+1, T-1: upper 0..j-1, lower 0..j
///   S-1, T+1: upper 0..j+1, lower 0..j
/// For S this span is invariant; for T its complement is (the generators act
/// on the quotient), so the truncated matrices still represent the algebra.
SpinorBasis basis_for(const TransformTag& tag, int j);

/// Family label the tabulated basis carries for the tag.
std::string printed_basis_family(const TransformTag& tag);

GeneratorSet<Rational> build_transformed_generators(int j, const TransformTag& tag,
                                                    FormSource source = FormSource::derived);

/// Structure relations and grading in exact arithmetic on basis_for(tag, j).
AlgebraReport verify_transformed_algebra(int j, const TransformTag& tag,
                                         FormSource source = FormSource::derived);

struct InvarianceReport {
  /// Nonzero images leaving the basis.
  int leaks = 0;
  /// Nonzero images of monomials just above the basis that fall into it.
  int back_leaks = 0;
  bool subspace_invariant() const { return leaks == 0; }
  bool quotient_invariant() const { return back_leaks == 0; }
};

InvarianceReport check_basis_invariance(const TransformTag& tag, int j,
                                        FormSource source = FormSource::derived);

struct FormDiff {
  std::string generator;
  bool identical = true;
  double max_abs_diff = 0.0;
};

/// Printed vs derived forms, compared as matrices on basis_for(tag, j).
std::vector<FormDiff> diff_printed_forms(const TransformTag& tag, int j);

enum class ColumnStatus { ok, overflow, undefined };

struct MetricOperator {
  TransformTag tag;
  bool inverse = false;
  Operator<double> matrix;
  /// Columns flagged overflow or undefined are zero in `matrix`.
  std::vector<ColumnStatus> status;
};

/// S = (a2+)^k with k = n1 + alpha s, or T = a2^e with e = -n1 + eta s, as a
/// block state map. Negative exponents are undefined.
MetricOperator build_metric(const FockSpace& space, const TransformTag& tag);

/// T^-1 = a2^(n1 - eta s). Only for T; throws std::invalid_argument for S.
MetricOperator build_metric_inverse(const FockSpace& space, const TransformTag& tag);

KetOp metric_ket(const TransformTag& tag);
KetOp metric_inverse_ket(const TransformTag& tag);

/// Multiplication-only intertwining identities, checked column by column on
/// unbounded kets. A column counts only if no intermediate state leaves the
/// cutoffs and no step is undefined.
///
/// S: S a1+ = a1+ a2+ S, a2+ S a1 = a1 S, S a2+ = a2+ S, a2+ S a2 = (N2 - n) S,
///    the two sigma rules, and S G = G' S for all nine generators.
/// T: the same content written with R = T^-1 (G R = R G'), since T itself
///    needs negative powers of a2 on almost every state. The tabulated
///    T rules are evaluated as informational rows.
AlgebraReport verify_intertwining(const FockSpace& space, const TransformTag& tag,
                                  double tol = 1e-10);

/// Derived forms with j -> a2+a2 as two-mode Fock operators; structure
/// relations on interior columns.
AlgebraReport verify_unfixed_algebra(const FockSpace& space, const TransformTag& tag,
                                     int interior_margin = 3, double tol = 1e-10);

}  // namespace osp21

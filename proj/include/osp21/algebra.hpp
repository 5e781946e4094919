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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osp21/operator.hpp"
#include "osp21/realization.hpp"

namespace osp21 {

/// The eight osp(2,1) generators plus the total boson number N, all on one domain.
template <typename Scalar>
struct GeneratorSet {
  Operator<Scalar> Jp, Jm, J0, J;
  Operator<Scalar> Vp, Vm, Wp, Wm;
  Operator<Scalar> N;
  Realization realization;

  const Domain& domain() const { return Jp.domain(); }

  std::array<std::pair<std::string_view, const Operator<Scalar>*>, 9> named() const {
    return {{{"J+", &Jp}, {"J-", &Jm}, {"J0", &J0}, {"J", &J},
             {"V+", &Vp}, {"V-", &Vm}, {"W+", &Wp}, {"W-", &Wm}, {"N", &N}}};
  }
};

struct RelationResult {
  std::string id;
  double residual = 0.0;
  bool passed = false;
  /// Reported for the record; does not affect AlgebraReport::passed().
  bool informational = false;
  /// Free-form context, e.g. how many columns were usable.
  std::string detail;
};

/// Per-relation residuals. Float checks use max|LHS-RHS| over the selected
/// columns divided by max(1, max|LHS|, max|RHS|); exact checks report the
/// raw max|LHS-RHS| and pass only at exactly zero.
struct AlgebraReport {
  std::string subject;
  int margin = 0;
  std::optional<std::array<int, 2>> cutoffs;
  std::optional<int> j;
  double tolerance = 0.0;
  bool exact = false;
  std::vector<RelationResult> relations;
  std::vector<std::string> notes;

  bool passed() const;
  /// Largest gating residual, or nullptr if there are no gating relations.
  const RelationResult* worst() const;
  double max_residual() const;
  void append(const std::vector<RelationResult>& more);
};

/// J+ = a1+ a2, J- = a2+ a1, J0 = (a1+a1 - a2+a2)/2, N = a1+a1 + a2+a2, odd
/// generators and J per the realization. Requires cutoffs >= 2.
GeneratorSet<double> build_generators(const FockSpace& space, RealizationKind realization);

/// All structure relations (commutators and anticommutators) of osp(2,1)
/// except the {V+-, W+-} = +-Q+- pair, evaluated on the selected columns.
/// An empty mask selects every column.
template <typename Scalar>
std::vector<RelationResult> check_structure_relations(const GeneratorSet<Scalar>& g,
                                                      const std::vector<bool>& columns,
                                                      double tol);

/// Boson commutators and the fermion anticommutator on the selected columns.
std::vector<RelationResult> check_ladder_relations(const FockSpace& space,
                                                   const std::vector<bool>& columns, double tol);

/// Even generators must preserve fermion number and odd ones flip it.
template <typename Scalar>
std::vector<RelationResult> check_grading(const GeneratorSet<Scalar>& g);

/// Full Fock-picture check: structure relations + ladder relations + grading,
/// restricted to interior columns (n_i <= cutoff_i - margin).
AlgebraReport verify_algebra(const GeneratorSet<double>& g, int interior_margin,
                             double tol = 1e-10);

/// Q+ = {V+, W+} and Q- = -{V-, W-}; checks that they close on the even part
/// and reports (informationally) how far they are from J+-.
template <typename Scalar>
AlgebraReport verify_qpm_closure(const GeneratorSet<Scalar>& g, int interior_margin = 3,
                                 double tol = 1e-10);

/// Least-squares c in [J, X] = c X for X in {V+, V-, W+, W-}; residual is the
/// relative misfit. Answers which right-hand side the data actually supports.
struct CoefficientFit {
  std::string relation;
  double coefficient = 0.0;
  double residual = 0.0;
};
template <typename Scalar>
std::vector<CoefficientFit> fit_j_odd_coefficients(const GeneratorSet<Scalar>& g,
                                                   const std::vector<bool>& columns);

enum class Parity { zero, even, odd, mixed };
std::string to_string(Parity p);

/// Fermion-number parity of an operator's sparsity pattern.
template <typename Scalar>
Parity fermion_parity(const Operator<Scalar>& op);

}  // namespace osp21

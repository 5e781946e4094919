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

#include <functional>
#include <map>
#include <set>

#include "osp21/fock_space.hpp"

namespace osp21 {

/// Finite superposition of Fock states with no cutoff.
///
/// Besides the amplitudes a ket remembers the largest n1 and n2 of every state
/// it passed through, and whether any step was undefined (a negative power of
/// a ladder operator). Intertwining checks use these to decide which columns a
/// truncated space could represent faithfully.
///
/// The formal support follows every path with boson lowering taken literally
/// (n may go negative), so a metric power applied after an annihilation still
/// gets its exponent checked.
class Ket {
 public:
  Ket() = default;
  static Ket basis(const FockState& st);

  const std::map<FockState, double>& terms() const { return terms_; }
  const std::set<FockState>& formal() const { return formal_; }
  bool undefined() const { return undefined_; }
  int peak1() const { return peak1_; }
  int peak2() const { return peak2_; }

  void add(const FockState& st, double amp);
  void add_formal(const FockState& st) { formal_.insert(st); }
  void mark_undefined() { undefined_ = true; }
  /// Carries over peaks and the undefined flag of an earlier ket.
  void inherit(const Ket& from);

  double max_abs() const;
  double amplitude(const FockState& st) const;

  friend Ket operator+(const Ket& a, const Ket& b);
  friend Ket operator-(const Ket& a, const Ket& b);
  friend Ket operator*(double c, const Ket& a);

 private:
  std::map<FockState, double> terms_;
  std::set<FockState> formal_;
  bool undefined_ = false;
  int peak1_ = 0;
  int peak2_ = 0;
};

/// Linear map on kets. A * B applies B first.
class KetOp {
 public:
  using Fn = std::function<Ket(const Ket&)>;
  explicit KetOp(Fn fn) : fn_(std::move(fn)) {}

  Ket operator()(const Ket& k) const { return fn_(k); }
  Ket operator()(const FockState& st) const { return fn_(Ket::basis(st)); }

  friend KetOp operator*(const KetOp& a, const KetOp& b);
  friend KetOp operator+(const KetOp& a, const KetOp& b);
  friend KetOp operator-(const KetOp& a, const KetOp& b);
  friend KetOp operator*(double c, const KetOp& a);

 private:
  Fn fn_;
};

namespace kets {

KetOp identity();
KetOp a1();
KetOp a1_dag();
KetOp a2();
KetOp a2_dag();
KetOp sigma_plus();
KetOp sigma_minus();

/// Multiplies each basis state by f(state).
KetOp diagonal(std::function<double(const FockState&)> f);

/// a2^e and (a2+)^e with a state-dependent exponent e. The exponent must only
/// depend on quantities a2 leaves alone (n1, s). Negative e marks the result
/// undefined and drops the term.
KetOp a2_power(std::function<int(const FockState&)> exponent);
KetOp a2_dag_power(std::function<int(const FockState&)> exponent);

}  // namespace kets

}  // namespace osp21

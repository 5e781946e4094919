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

#include "osp21/ket.hpp"

#include <algorithm>
#include <cmath>

namespace osp21 {

Ket Ket::basis(const FockState& st) {
  Ket k;
  k.add(st, 1.0);
  k.add_formal(st);
  return k;
}

void Ket::add(const FockState& st, double amp) {
  peak1_ = std::max(peak1_, st.n1);
  peak2_ = std::max(peak2_, st.n2);
  if (amp == 0.0) return;
  auto [it, fresh] = terms_.try_emplace(st, amp);
  if (!fresh) {
    it->second += amp;
    if (it->second == 0.0) terms_.erase(it);
  }
}

void Ket::inherit(const Ket& from) {
  peak1_ = std::max(peak1_, from.peak1_);
  peak2_ = std::max(peak2_, from.peak2_);
  undefined_ = undefined_ || from.undefined_;
}

double Ket::max_abs() const {
  double m = 0.0;
  for (const auto& [st, a] : terms_) m = std::max(m, std::abs(a));
  return m;
}

double Ket::amplitude(const FockState& st) const {
  const auto it = terms_.find(st);
  return it == terms_.end() ? 0.0 : it->second;
}

Ket operator+(const Ket& a, const Ket& b) {
  Ket out = a;
  out.inherit(b);
  for (const auto& [st, amp] : b.terms_) out.add(st, amp);
  out.formal_.insert(b.formal_.begin(), b.formal_.end());
  return out;
}

Ket operator-(const Ket& a, const Ket& b) { return a + (-1.0) * b; }

Ket operator*(double c, const Ket& a) {
  Ket out;
  out.inherit(a);
  out.formal_ = a.formal_;
  for (const auto& [st, amp] : a.terms_) out.add(st, c * amp);
  return out;
}

KetOp operator*(const KetOp& a, const KetOp& b) {
  return KetOp([a, b](const Ket& k) { return a(b(k)); });
}

KetOp operator+(const KetOp& a, const KetOp& b) {
  return KetOp([a, b](const Ket& k) { return a(k) + b(k); });
}

KetOp operator-(const KetOp& a, const KetOp& b) {
  return KetOp([a, b](const Ket& k) { return a(k) - b(k); });
}

KetOp operator*(double c, const KetOp& a) {
  return KetOp([c, a](const Ket& k) { return c * a(k); });
}

namespace kets {

namespace {

using Step = std::function<void(const FockState&, double, Ket&)>;
using FormalStep = std::function<void(const FockState&, Ket&)>;

// Lifts a single-state map to kets.
KetOp per_state(Step step, FormalStep formal) {
  return KetOp([step, formal](const Ket& in) {
    Ket out;
    out.inherit(in);
    for (const auto& [st, amp] : in.terms()) step(st, amp, out);
    for (const auto& st : in.formal()) formal(st, out);
    return out;
  });
}

FormalStep shift(int d1, int d2) {
  return [d1, d2](const FockState& st, Ket& out) {
    out.add_formal({st.n1 + d1, st.n2 + d2, st.s});
  };
}

double falling_root(int top, int count) {
  // sqrt(top (top-1) ... (top-count+1))
  double p = 1.0;
  for (int k = 0; k < count; ++k) p *= top - k;
  return std::sqrt(p);
}

}  // namespace

KetOp identity() {
  return KetOp([](const Ket& k) { return k; });
}

KetOp a1() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    if (st.n1 == 0) return;
    out.add({st.n1 - 1, st.n2, st.s}, amp * std::sqrt(st.n1));
  }, shift(-1, 0));
}

KetOp a1_dag() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    out.add({st.n1 + 1, st.n2, st.s}, amp * std::sqrt(st.n1 + 1));
  }, shift(1, 0));
}

KetOp a2() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    if (st.n2 == 0) return;
    out.add({st.n1, st.n2 - 1, st.s}, amp * std::sqrt(st.n2));
  }, shift(0, -1));
}

KetOp a2_dag() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    out.add({st.n1, st.n2 + 1, st.s}, amp * std::sqrt(st.n2 + 1));
  }, shift(0, 1));
}

KetOp sigma_plus() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    if (st.s == 0) out.add({st.n1, st.n2, 1}, amp);
  }, [](const FockState& st, Ket& out) {
    if (st.s == 0) out.add_formal({st.n1, st.n2, 1});
  });
}

KetOp sigma_minus() {
  return per_state([](const FockState& st, double amp, Ket& out) {
    if (st.s == 1) out.add({st.n1, st.n2, 0}, amp);
  }, [](const FockState& st, Ket& out) {
    if (st.s == 1) out.add_formal({st.n1, st.n2, 0});
  });
}

KetOp diagonal(std::function<double(const FockState&)> f) {
  return per_state([f](const FockState& st, double amp, Ket& out) { out.add(st, amp * f(st)); },
                   shift(0, 0));
}

KetOp a2_power(std::function<int(const FockState&)> exponent) {
  return per_state([exponent](const FockState& st, double amp, Ket& out) {
    const int e = exponent(st);
    if (e < 0) {
      out.mark_undefined();
      return;
    }
    if (e > st.n2) return;
    out.add({st.n1, st.n2 - e, st.s}, amp * falling_root(st.n2, e));
  }, [exponent](const FockState& st, Ket& out) {
    const int e = exponent(st);
    if (e < 0) {
      out.mark_undefined();
      return;
    }
    out.add_formal({st.n1, st.n2 - e, st.s});
  });
}

KetOp a2_dag_power(std::function<int(const FockState&)> exponent) {
  return per_state([exponent](const FockState& st, double amp, Ket& out) {
    const int e = exponent(st);
    if (e < 0) {
      out.mark_undefined();
      return;
    }
    out.add({st.n1, st.n2 + e, st.s}, amp * falling_root(st.n2 + e, e));
  }, [exponent](const FockState& st, Ket& out) {
    const int e = exponent(st);
    if (e < 0) {
      out.mark_undefined();
      return;
    }
    out.add_formal({st.n1, st.n2 + e, st.s});
  });
}

}  // namespace kets

}  // namespace osp21

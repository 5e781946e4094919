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

#include "osp21/gamma.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "osp21/ladder.hpp"

namespace osp21 {

namespace {

// sqrt(hi! / lo!) for hi >= lo >= 0.
double sqrt_factorial_ratio(int hi, int lo) {
  if (hi <= 20) {
    double p = 1.0;
    for (int k = lo + 1; k <= hi; ++k) p *= k;
    return std::sqrt(p);
  }
  return std::exp(0.5 * (std::lgamma(hi + 1.0) - std::lgamma(lo + 1.0)));
}

}  // namespace

std::string to_string(GammaKind k) { return k == GammaKind::gamma1 ? "gamma1" : "gamma2"; }

GammaKind parse_gamma_kind(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "gamma1" || t == "1" || t == "g1") return GammaKind::gamma1;
  if (t == "gamma2" || t == "2" || t == "g2") return GammaKind::gamma2;
  throw std::invalid_argument("unknown gamma operator '" + s + "' (expected gamma1 or gamma2)");
}

GammaImage gamma_action(GammaKind kind, const FockState& st) {
  GammaImage out;
  out.state = st;
  if (kind == GammaKind::gamma1) {
    if (st.n2 < st.n1) {
      out.annihilated = true;
      return out;
    }
    out.state.n2 = st.n2 - st.n1;
    out.amplitude = sqrt_factorial_ratio(st.n2, st.n2 - st.n1);
  } else {
    out.state.n2 = st.n2 + st.n1;
    out.amplitude = 1.0 / sqrt_factorial_ratio(st.n2 + st.n1 + 1, st.n2);
  }
  return out;
}

GammaImage gamma_power_action(const FockSpace& space, GammaKind kind, const FockState& st) {
  const auto op = make_boson(space, Mode::two,
                             kind == GammaKind::gamma1 ? Ladder::annihilate : Ladder::create);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(space.dim());
  v(space.index(st)) = 1.0;
  for (int k = 0; k < st.n1; ++k) v = op.matrix() * v;

  GammaImage out;
  out.state = st;
  Eigen::Index at = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0.0) continue;
    if (at >= 0) throw std::logic_error("gamma_power_action: image is not a single state");
    at = i;
  }
  if (at < 0) {
    out.annihilated = true;
    return out;
  }
  out.state = space.state(at);
  out.amplitude = v(at);
  return out;
}

int GammaReport::mismatches() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [](const GammaRow& r) { return !r.match; }));
}

GammaReport gamma_report(GammaKind kind, int max_total, double tol) {
  if (max_total < 0) throw std::invalid_argument("gamma_report: max_total must be >= 0");
  GammaReport rep;
  rep.kind = kind;
  rep.max_total = max_total;
  rep.tolerance = tol;
  // Gamma2 images reach n2 + n1 <= max_total, so one square space suffices.
  const FockSpace space(max_total, max_total);
  for (int n1 = 0; n1 <= max_total; ++n1) {
    for (int n2 = 0; n1 + n2 <= max_total; ++n2) {
      GammaRow row;
      row.state = FockState{n1, n2, 0};
      row.formula = gamma_action(kind, row.state);
      row.power = gamma_power_action(space, kind, row.state);
      row.abs_diff = std::abs(row.formula.amplitude - row.power.amplitude);
      const bool same_target = row.formula.annihilated == row.power.annihilated &&
                               (row.formula.annihilated || row.formula.state == row.power.state);
      row.match = same_target &&
                  row.abs_diff <= tol * std::max(1.0, std::abs(row.power.amplitude));
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace osp21

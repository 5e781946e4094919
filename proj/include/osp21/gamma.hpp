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

#include "osp21/fock_space.hpp"

namespace osp21 {

/// Gamma1 = (a2)^(a1+a1), Gamma2 = (a2+)^(a1+a1); both leave n1 and s alone.
enum class GammaKind { gamma1, gamma2 };

std::string to_string(GammaKind k);
GammaKind parse_gamma_kind(const std::string& s);

struct GammaImage {
  FockState state;
  double amplitude = 0.0;
  /// Gamma1 with n2 < n1: the image is the zero vector.
  bool annihilated = false;
};

/// Closed-form state maps:
///   Gamma1 |n1,n2> = sqrt(n2!/(n2-n1)!) |n1, n2-n1>
///   Gamma2 |n1,n2> = sqrt(n2!/(n2+n1+1)!) |n1, n2+n1>
/// The Gamma2 amplitude is the tabulated one; gamma_power_action gives the
/// value of the actual operator power. Log-space above n = 20.
GammaImage gamma_action(GammaKind kind, const FockState& st);

/// Applies a2 (or a2+) n1 times as a sparse matrix built on the given space.
/// The space must hold the image (n2 + n1 <= cutoff2 for Gamma2).
GammaImage gamma_power_action(const FockSpace& space, GammaKind kind, const FockState& st);

struct GammaRow {
  FockState state;
  GammaImage formula;
  GammaImage power;
  double abs_diff = 0.0;
  bool match = false;
};

struct GammaReport {
  GammaKind kind = GammaKind::gamma1;
  int max_total = 0;
  double tolerance = 0.0;
  std::vector<GammaRow> rows;
  int mismatches() const;
};

/// Every state with s = 0 and n1 + n2 <= max_total. Rows match when
/// |formula - power| <= tol * max(1, |power|) and the target states agree.
GammaReport gamma_report(GammaKind kind, int max_total, double tol = 1e-12);

}  // namespace osp21

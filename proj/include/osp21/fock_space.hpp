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

#include <compare>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace osp21 {

/// Occupation-number state |n1, n2, s> of two bosonic modes and one fermion.
///
/// s = 1 is the fermion-occupied level: sigma_0 = +1, the upper spinor
/// component. The fermion annihilator f = sigma_- maps s = 1 to s = 0.
struct FockState {
  int n1 = 0;
  int n2 = 0;
  int s = 0;

  friend auto operator<=>(const FockState&, const FockState&) = default;
};

std::string to_string(const FockState& st);

/// Truncated Fock space with boson cutoffs; dim = (cutoff1+1)(cutoff2+1)*2.
///
/// States are enumerated lexicographically in (n1, n2, s):
/// index = (n1 * (cutoff2 + 1) + n2) * 2 + s.
class FockSpace {
 public:
  FockSpace(int cutoff1, int cutoff2);

  int cutoff1() const { return cutoff1_; }
  int cutoff2() const { return cutoff2_; }
  Eigen::Index dim() const {
    return static_cast<Eigen::Index>(cutoff1_ + 1) * (cutoff2_ + 1) * 2;
  }

  bool contains(const FockState& st) const {
    return st.n1 >= 0 && st.n2 >= 0 && st.n1 <= cutoff1_ && st.n2 <= cutoff2_ &&
           (st.s == 0 || st.s == 1);
  }
  /// Throws std::out_of_range for states outside the truncation.
  Eigen::Index index(const FockState& st) const;
  FockState state(Eigen::Index i) const;

  /// n_i <= cutoff_i - margin for both modes.
  bool is_interior(const FockState& st, int margin) const {
    return st.n1 <= cutoff1_ - margin && st.n2 <= cutoff2_ - margin;
  }
  std::vector<bool> interior_mask(int margin) const;

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int cutoff1_;
  int cutoff2_;
};

}  // namespace osp21

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

#include "osp21/fock_space.hpp"

#include <stdexcept>

namespace osp21 {

std::string to_string(const FockState& st) {
  return "|" + std::to_string(st.n1) + "," + std::to_string(st.n2) + "," +
         std::to_string(st.s) + ">";
}

FockSpace::FockSpace(int cutoff1, int cutoff2) : cutoff1_(cutoff1), cutoff2_(cutoff2) {
  if (cutoff1 < 0 || cutoff2 < 0) {
    throw std::invalid_argument("FockSpace: cutoffs must be non-negative");
  }
}

Eigen::Index FockSpace::index(const FockState& st) const {
  if (!contains(st)) throw std::out_of_range("FockSpace: " + to_string(st) + " outside truncation");
  return (static_cast<Eigen::Index>(st.n1) * (cutoff2_ + 1) + st.n2) * 2 + st.s;
}

FockState FockSpace::state(Eigen::Index i) const {
  if (i < 0 || i >= dim()) throw std::out_of_range("FockSpace: index out of range");
  FockState st;
  st.s = static_cast<int>(i % 2);
  i /= 2;
  st.n2 = static_cast<int>(i % (cutoff2_ + 1));
  st.n1 = static_cast<int>(i / (cutoff2_ + 1));
  return st;
}

std::vector<bool> FockSpace::interior_mask(int margin) const {
  std::vector<bool> mask(static_cast<std::size_t>(dim()));
  for (Eigen::Index i = 0; i < dim(); ++i) mask[i] = is_interior(state(i), margin);
  return mask;
}

}  // namespace osp21

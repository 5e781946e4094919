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

#include "osp21/ladder.hpp"

#include <cmath>

namespace osp21 {

Operator<double> make_boson(const FockSpace& space, Mode mode, Ladder kind) {
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index c = 0; c < space.dim(); ++c) {
    FockState st = space.state(c);
    int& n = mode == Mode::one ? st.n1 : st.n2;
    double amp = 0.0;
    if (kind == Ladder::annihilate) {
      if (n == 0) continue;
      amp = std::sqrt(static_cast<double>(n));
      --n;
    } else {
      ++n;
      amp = std::sqrt(static_cast<double>(n));
    }
    if (!space.contains(st)) continue;
    t.emplace_back(space.index(st), c, amp);
  }
  return Operator<double>::from_triplets(space, t);
}

Operator<double> make_fermion(const FockSpace& space, FermionOp kind) {
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index c = 0; c < space.dim(); ++c) {
    FockState st = space.state(c);
    switch (kind) {
      case FermionOp::sigma_zero:
        t.emplace_back(c, c, st.s == 1 ? 1.0 : -1.0);
        break;
      case FermionOp::sigma_minus:
        if (st.s == 1) {
          st.s = 0;
          t.emplace_back(space.index(st), c, 1.0);
        }
        break;
      case FermionOp::sigma_plus:
        if (st.s == 0) {
          st.s = 1;
          t.emplace_back(space.index(st), c, 1.0);
        }
        break;
    }
  }
  return Operator<double>::from_triplets(space, t);
}

Operator<double> make_number(const FockSpace& space, Mode mode) {
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index c = 0; c < space.dim(); ++c) {
    const FockState st = space.state(c);
    const int n = mode == Mode::one ? st.n1 : st.n2;
    if (n != 0) t.emplace_back(c, c, static_cast<double>(n));
  }
  return Operator<double>::from_triplets(space, t);
}

Operator<double> make_fermion_number(const FockSpace& space) {
  std::vector<Eigen::Triplet<double>> t;
  for (Eigen::Index c = 0; c < space.dim(); ++c) {
    if (space.state(c).s == 1) t.emplace_back(c, c, 1.0);
  }
  return Operator<double>::from_triplets(space, t);
}

}  // namespace osp21

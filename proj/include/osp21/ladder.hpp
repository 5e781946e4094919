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

#include "osp21/operator.hpp"

namespace osp21 {

enum class Mode { one = 1, two = 2 };
enum class Ladder { annihilate, create };
enum class FermionOp { sigma_minus, sigma_plus, sigma_zero };

/// Boson ladder operator on one mode, identity on the other mode and the fermion.
/// Creation on the top state of the truncation maps to zero.
Operator<double> make_boson(const FockSpace& space, Mode mode, Ladder kind);

/// sigma_- = f, sigma_+ = f+, sigma_0 = diag(+1 on s=1, -1 on s=0).
Operator<double> make_fermion(const FockSpace& space, FermionOp kind);

/// a_i+ a_i, built diagonally so the top state is not truncated.
Operator<double> make_number(const FockSpace& space, Mode mode);

/// f+ f = sigma_+ sigma_-, the projector on s = 1.
Operator<double> make_fermion_number(const FockSpace& space);

}  // namespace osp21

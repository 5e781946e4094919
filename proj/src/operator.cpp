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

#include "osp21/operator.hpp"

namespace osp21 {

std::string describe(const Domain& d) {
  if (const auto* f = std::get_if<FockSpace>(&d)) {
    return "fock(" + std::to_string(f->cutoff1()) + "," + std::to_string(f->cutoff2()) + ")";
  }
  const auto& s = std::get<SpinorBasis>(d);
  return "spinor(j=" + std::to_string(s.j()) + "," + std::to_string(s.upper_degree()) + "," +
         std::to_string(s.lower_degree()) + ")";
}

std::string to_string(ScalarKind k) {
  switch (k) {
    case ScalarKind::exact_integer: return "exact-integer";
    case ScalarKind::exact_rational: return "exact-rational";
    case ScalarKind::complex_float: return "complex-float";
  }
  return "unknown";
}

}  // namespace osp21

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

#include "osp21/realization.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace osp21 {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

RealizationKind TransformTag::source() const {
  const bool a = (metric == Metric::S) == (sign == 1);
  return a ? RealizationKind::ferm_a : RealizationKind::ferm_b;
}

std::string to_string(RealizationKind k) {
  return k == RealizationKind::ferm_a ? "ferma" : "fermb";
}

std::string to_string(const TransformTag& t) {
  return std::string(t.metric == Metric::S ? "s" : "t") + (t.sign > 0 ? "+1" : "-1");
}

std::string to_string(const Realization& r) {
  return std::visit([](const auto& v) { return to_string(v); }, r);
}

RealizationKind parse_realization(const std::string& s) {
  const auto l = lower(s);
  if (l == "ferma" || l == "a") return RealizationKind::ferm_a;
  if (l == "fermb" || l == "b") return RealizationKind::ferm_b;
  throw std::invalid_argument("unknown realization '" + s + "' (expected ferma or fermb)");
}

TransformTag parse_tag(const std::string& s) {
  const auto l = lower(s);
  for (const auto& t : kAllTags) {
    if (to_string(t) == l) return t;
  }
  throw std::invalid_argument("unknown transform tag '" + s + "' (expected s+1, s-1, t+1, t-1)");
}

}  // namespace osp21

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
#include <variant>

namespace osp21 {

/// The two boson-fermion realizations of the odd generators.
///   ferm_a: V+ = f+ a2, V- = -f+ a1, W+ = f a1+, W- = f a2+, J = N/2 + f+ f
///   ferm_b: V+ = f a2,  V- = -f a1,  W+ = f+ a1+, W- = f+ a2+, J = N/2 + f f+
enum class RealizationKind { ferm_a, ferm_b };

enum class Metric { S, T };

/// Similarity metric and its sign:
///   S = (a2+)^(a1+ a1 + alpha sigma_+ sigma_-),  alpha = sign
///   T = (a2)^(-a1+ a1 + eta sigma_+ sigma_-),    eta = sign
struct TransformTag {
  Metric metric = Metric::S;
  int sign = 1;

  friend bool operator==(const TransformTag&, const TransformTag&) = default;

  /// Realization the metric is applied to: S+1 and T-1 act on ferm_a,
  /// S-1 and T+1 on ferm_b.
  RealizationKind source() const;
};

inline constexpr TransformTag kAllTags[] = {
    {Metric::S, 1}, {Metric::S, -1}, {Metric::T, 1}, {Metric::T, -1}};

using Realization = std::variant<RealizationKind, TransformTag>;

std::string to_string(RealizationKind k);
std::string to_string(const TransformTag& t);  // "s+1", "s-1", "t+1", "t-1"
std::string to_string(const Realization& r);

/// Accepts "ferma"/"fermb" (case-insensitive); throws std::invalid_argument.
RealizationKind parse_realization(const std::string& s);
/// Accepts "s+1", "s-1", "t+1", "t-1" (case-insensitive); throws std::invalid_argument.
TransformTag parse_tag(const std::string& s);

}  // namespace osp21

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

#include <json.hpp>

#include "osp21/algebra.hpp"
#include "osp21/gamma.hpp"
#include "osp21/operator.hpp"
#include "osp21/spectra.hpp"
#include "osp21/transform.hpp"

namespace osp21::io {

using json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// %.17g, enough digits to round-trip a double.
std::string format_double(double x);

/// {tool, format_version, command} followed by `payload`'s members.
json document(const std::string& command, const json& payload);

json to_json(const Domain& d);
Domain domain_from_json(const json& j);

json to_json(const Operator<double>& op);
json to_json(const Operator<Rational>& op);
Operator<double> operator_from_json(const json& j);
Operator<Rational> rational_operator_from_json(const json& j);

json to_json(const AlgebraReport& r);
json to_json(const GeneratorSet<Rational>& g, int j, const TransformTag& tag);

json to_json(const JCKerrParams& p);
json to_json(const MJCParams& p);
json to_json(const MatchResult& m);
json to_json(const RecurrenceDiff& d);
json to_json(const MJCClosedForm& c);
json to_json(const ComparisonReport& r);
json to_json(const GammaReport& r);

struct SpectrumRecord {
  Model model = Model::jck;
  int j = 0;
  json params;
  Spectrum spectrum;
  json audit = json::object();
};

json to_json(const SpectrumRecord& s);

/// One header row, then one row per record.
std::string to_csv(const SpectrumRecord& s);
std::string to_csv(const AlgebraReport& r);
std::string to_csv(const ComparisonReport& r);
std::string to_csv(const GammaReport& r);

std::string to_table(const SpectrumRecord& s);
std::string to_table(const AlgebraReport& r);
std::string to_table(const ComparisonReport& r);
std::string to_table(const GammaReport& r);

}  // namespace osp21::io

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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "osp21/io.hpp"
#include "osp21/ladder.hpp"
#include "osp21/transform.hpp"

using namespace osp21;
using io::json;

TEST_CASE("doubles survive text") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::nextafter(1.0, 2.0)}) {
    CHECK(std::stod(io::format_double(x)) == x);
    CHECK(json::parse(json(x).dump()).get<double>() == x);
  }
}

TEST_CASE("float operator round trip") {
  const FockSpace space(3, 2);
  const auto op = make_boson(space, Mode::one, Ladder::create) +
                  make_fermion(space, FermionOp::sigma_minus) * make_number(space, Mode::two);
  const auto j = io::to_json(op);
  CHECK(j.at("scalar_kind") == "complex-float");
  CHECK(j.at("domain").at("kind") == "fock");
  const auto back = io::operator_from_json(json::parse(j.dump()));
  CHECK(exactly_equal(back, op));
  CHECK(io::to_json(back).dump() == j.dump());
}

TEST_CASE("exact operator round trip") {
  const SpinorBasis b(3, 3, 2);
  std::vector<Operator<Rational>::Triplet> t{{0, 1, Rational(3)}, {2, 2, Rational(-1, 2)}, {4, 0, Rational(7, 3)}};
  const auto op = Operator<Rational>::from_triplets(b, t);
  const auto j = io::to_json(op);
  CHECK(j.at("scalar_kind") == "exact-rational");
  bool saw_int = false, saw_frac = false;
  for (const auto& row : j.at("triplets")) {
    if (row[2].is_number_integer()) saw_int = true;
    if (row[2].is_string()) {
      saw_frac = true;
      CHECK(row[2].get<std::string>().find('/') != std::string::npos);
    }
  }
  CHECK(saw_int);
  CHECK(saw_frac);
  const auto back = io::rational_operator_from_json(json::parse(j.dump()));
  CHECK(exactly_equal(back, op));

  auto bad = j;
  bad["triplets"][0][3] = 1;
  CHECK_THROWS(io::rational_operator_from_json(bad));
}

TEST_CASE("documents carry a stable header") {
  const auto d = io::document("gamma", json{{"x", 1}});
  auto it = d.begin();
  CHECK(it.key() == "tool");
  ++it;
  CHECK(it.key() == "format_version");
  CHECK(d.at("format_version") == io::kFormatVersion);
  CHECK(d.at("command") == "gamma");
  CHECK(d.dump() == io::document("gamma", json{{"x", 1}}).dump());
}

TEST_CASE("csv quoting") {
  AlgebraReport r;
  r.subject = "a \"quoted\" note";
  r.relations.push_back({"[J+,J-]", 0.0, true, false, ""});
  r.relations.push_back({"{V+,W-}", 1e-3, false, true, ""});
  const auto csv = io::to_csv(r);
  CHECK(csv.find("\"[J+,J-]\"") != std::string::npos);
  CHECK(csv.find("\"a \"\"quoted\"\" note\"") != std::string::npos);
  CHECK(io::to_csv(r) == csv);
  CHECK(!io::to_table(r).empty());
}

TEST_CASE("reports serialize deterministically") {
  const auto c = compare_reduced_vs_full(2, MJCParams{}, FockSpace(6, 6));
  CHECK(io::to_json(c).dump() == io::to_json(compare_reduced_vs_full(2, MJCParams{}, FockSpace(6, 6))).dump());
  const TransformTag tag{Metric::S, 1};
  const auto gj = io::to_json(build_transformed_generators(3, tag), 3, tag);
  CHECK(gj.at("j") == 3);
  CHECK(gj.at("generators").size() > 0);
}

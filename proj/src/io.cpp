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

#include "osp21/io.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace osp21::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json document(const std::string& command, const json& payload) {
  json out;
  out["tool"] = "osp21";
  out["format_version"] = kFormatVersion;
  out["command"] = command;
  for (auto it = payload.begin(); it != payload.end(); ++it) out[it.key()] = it.value();
  return out;
}

// ---------------------------------------------------------------------------

json to_json(const Domain& d) {
  if (const auto* f = std::get_if<FockSpace>(&d)) {
    return {{"kind", "fock"}, {"cutoffs", {f->cutoff1(), f->cutoff2()}}};
  }
  const auto& b = std::get<SpinorBasis>(d);
  return {{"kind", "spinor"},
          {"j", b.j()},
          {"upper_degree", b.upper_degree()},
          {"lower_degree", b.lower_degree()},
          {"family", b.family()}};
}

Domain domain_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "fock") {
    const auto& c = j.at("cutoffs");
    return FockSpace(c.at(0).get<int>(), c.at(1).get<int>());
  }
  if (kind == "spinor") {
    return SpinorBasis(j.at("j").get<int>(), j.at("upper_degree").get<int>(),
                       j.at("lower_degree").get<int>());
  }
  throw std::invalid_argument("unknown domain kind '" + kind + "'");
}

json to_json(const Operator<double>& op) {
  json t = json::array();
  for (const auto& e : op.triplets()) t.push_back({e.row(), e.col(), e.value(), 0.0});
  return {{"domain", to_json(op.domain())},
          {"scalar_kind", to_string(op.scalar_kind())},
          {"triplets", std::move(t)}};
}

json to_json(const Operator<Rational>& op) {
  json t = json::array();
  for (const auto& e : op.triplets()) {
    const Rational& v = e.value();
    t.push_back({e.row(), e.col(), v.is_integer() ? json(v.num()) : json(to_string(v)), 0});
  }
  return {{"domain", to_json(op.domain())},
          {"scalar_kind", to_string(op.scalar_kind())},
          {"triplets", std::move(t)}};
}

namespace {

void require_real(const json& im) {
  const bool zero = im.is_string() ? parse_rational(im.get<std::string>()) == Rational(0)
                                   : im.get<double>() == 0.0;
  if (!zero) throw std::invalid_argument("operator_from_json: complex entries unsupported");
}

}  // namespace

Operator<double> operator_from_json(const json& j) {
  const Domain d = domain_from_json(j.at("domain"));
  std::vector<Eigen::Triplet<double>> t;
  for (const auto& e : j.at("triplets")) {
    require_real(e.at(3));
    const double v = e.at(2).is_string() ? to_double(parse_rational(e.at(2).get<std::string>()))
                                         : e.at(2).get<double>();
    t.emplace_back(e.at(0).get<Eigen::Index>(), e.at(1).get<Eigen::Index>(), v);
  }
  return Operator<double>::from_triplets(d, t);
}

Operator<Rational> rational_operator_from_json(const json& j) {
  const Domain d = domain_from_json(j.at("domain"));
  std::vector<Eigen::Triplet<Rational>> t;
  for (const auto& e : j.at("triplets")) {
    require_real(e.at(3));
    const auto& v = e.at(2);
    Rational r;
    if (v.is_string()) {
      r = parse_rational(v.get<std::string>());
    } else if (v.is_number_integer()) {
      r = Rational(v.get<std::int64_t>());
    } else {
      throw std::invalid_argument("rational_operator_from_json: entries must be integers or \"p/q\"");
    }
    t.emplace_back(e.at(0).get<Eigen::Index>(), e.at(1).get<Eigen::Index>(), r);
  }
  return Operator<Rational>::from_triplets(d, t);
}

// ---------------------------------------------------------------------------

namespace {

json cutoffs_json(const std::optional<std::array<int, 2>>& c) {
  return c ? json{(*c)[0], (*c)[1]} : json(nullptr);
}

}  // namespace

json to_json(const AlgebraReport& r) {
  json rows = json::array();
  for (const auto& rel : r.relations) {
    json row{{"relation_id", rel.id},
             {"residual", rel.residual},
             {"passed", rel.passed},
             {"margin", r.margin},
             {"cutoffs", cutoffs_json(r.cutoffs)}};
    if (rel.informational) row["informational"] = true;
    if (!rel.detail.empty()) row["detail"] = rel.detail;
    rows.push_back(std::move(row));
  }
  json out{{"subject", r.subject},
           {"passed", r.passed()},
           {"max_residual", r.max_residual()},
           {"tolerance", r.tolerance},
           {"exact", r.exact},
           {"margin", r.margin},
           {"cutoffs", cutoffs_json(r.cutoffs)},
           {"j", r.j ? json(*r.j) : json(nullptr)},
           {"relations", std::move(rows)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const GeneratorSet<Rational>& g, int j, const TransformTag& tag) {
  json ops = json::object();
  for (const auto& [name, op] : g.named()) ops[std::string(name)] = to_json(*op);
  const auto& basis = std::get<SpinorBasis>(g.domain());
  return {{"tag", to_string(tag)}, {"j", j}, {"basis_family", basis.family()}, {"generators", ops}};
}

json to_json(const JCKerrParams& p) {
  return {{"omega", p.omega}, {"omega0", p.omega0}, {"kappa", p.kappa}, {"lambda", p.lambda}};
}

json to_json(const MJCParams& p) {
  return {{"omega", p.omega}, {"omega0", p.omega0}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2}};
}

json to_json(const MatchResult& m) {
  json matched = json::array();
  for (const auto& p : m.matched) matched.push_back({p.reference, p.found, p.diff});
  return {{"matched", std::move(matched)},
          {"unmatched", m.unmatched_reference},
          {"unmatched_candidates", m.unmatched_candidates}};
}

namespace {

json complex_list(const std::vector<std::complex<double>>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back({z.real(), z.imag()});
  return out;
}

}  // namespace

json to_json(const RecurrenceDiff& d) {
  json rows = json::array();
  for (const auto& r : d.rows) {
    rows.push_back({{"row", r.label},
                    {"derived_diag", r.derived_diag},
                    {"printed_diag", r.printed_diag},
                    {"derived_partner", r.derived_partner},
                    {"derived_coupling", r.derived_coupling},
                    {"printed_partner", r.printed_partner},
                    {"printed_coupling", r.printed_coupling}});
  }
  return {{"j", d.j},
          {"params", to_json(d.params)},
          {"max_diag_diff", d.max_diag_diff},
          {"partner_mismatches", d.partner_mismatches},
          {"rows", std::move(rows)},
          {"printed_roots", complex_list(d.printed_roots)}};
}

json to_json(const MJCClosedForm& c) {
  json branches = json::array();
  for (const auto& b : c.branches) {
    branches.push_back({{"energy", b.energy},
                        {"c2", b.c2},
                        {"residual", b.residual},
                        {"accepted", b.accepted},
                        {"phi_upper", b.phi.upper},
                        {"phi_lower", b.phi.lower}});
  }
  return {{"j", c.j},
          {"n", c.n},
          {"upper_zero", c.upper_zero},
          {"consistent", c.consistent},
          {"projection_residual", c.projection_residual},
          {"printed", {c.printed[0], c.printed[1]}},
          {"branches", std::move(branches)}};
}

json to_json(const ComparisonReport& r) {
  json printed = json::array();
  for (const auto& e : r.printed) {
    printed.push_back({{"label", e.label},
                       {"value", e.value},
                       {"in_reduced", e.in_reduced},
                       {"in_full", e.in_full}});
  }
  return {{"model", to_string(r.model)},
          {"j", r.j},
          {"cutoffs", {r.cutoffs[0], r.cutoffs[1]}},
          {"reduced", r.reduced},
          {"full_count", r.full.size()},
          {"audit", to_json(r.reduced_in_full)},
          {"image", r.image},
          {"image_audit", to_json(r.image_in_full)},
          {"printed", std::move(printed)},
          {"embedding", {{"max_abs", r.embedding_max_abs}, {"frobenius", r.embedding_frobenius}}}};
}

namespace {

json state_json(const FockState& s) { return {s.n1, s.n2, s.s}; }

json image_json(const GammaImage& g) {
  if (g.annihilated) return nullptr;
  return {{"state", state_json(g.state)}, {"amplitude", g.amplitude}};
}

}  // namespace

json to_json(const GammaReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"state", state_json(row.state)},
                    {"formula", image_json(row.formula)},
                    {"power", image_json(row.power)},
                    {"abs_diff", row.abs_diff},
                    {"match", row.match}});
  }
  return {{"which", to_string(r.kind)},
          {"max_total", r.max_total},
          {"tolerance", r.tolerance},
          {"mismatches", r.mismatches()},
          {"rows", std::move(rows)}};
}

json to_json(const SpectrumRecord& s) {
  json out{{"model", to_string(s.model)},
           {"j", s.j},
           {"params", s.params},
           {"provenance", to_string(s.spectrum.provenance)},
           {"eigenvalues", complex_list(s.spectrum.eigenvalues)},
           {"residuals", s.spectrum.residuals},
           {"audit", s.audit}};
  if (!s.spectrum.warnings.empty()) out["warnings"] = s.spectrum.warnings;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string state_label(const FockState& s) {
  return std::to_string(s.n1) + " " + std::to_string(s.n2) + " " + std::to_string(s.s);
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_) {
      w.resize(std::max(w.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    }
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        std::string cell = r[i];
        if (i + 1 < r.size()) cell.resize(w[i] + 2, ' ');
        line += cell;
      }
      os << line << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string to_csv(const SpectrumRecord& s) {
  std::ostringstream os;
  os << "model,j,provenance,index,re,im,residual\n";
  for (std::size_t i = 0; i < s.spectrum.eigenvalues.size(); ++i) {
    const auto& z = s.spectrum.eigenvalues[i];
    os << to_string(s.model) << ',' << s.j << ',' << to_string(s.spectrum.provenance) << ',' << i
       << ',' << format_double(z.real()) << ',' << format_double(z.imag()) << ','
       << (i < s.spectrum.residuals.size() ? format_double(s.spectrum.residuals[i]) : "") << '\n';
  }
  return os.str();
}

std::string to_csv(const AlgebraReport& r) {
  std::ostringstream os;
  os << "subject,relation_id,residual,passed,informational\n";
  for (const auto& rel : r.relations) {
    os << csv_field(r.subject) << ',' << csv_field(rel.id) << ',' << format_double(rel.residual)
       << ',' << (rel.passed ? 1 : 0) << ',' << (rel.informational ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string to_csv(const ComparisonReport& r) {
  std::ostringstream os;
  os << "kind,label,value,found,in_full\n";
  for (const auto& m : r.reduced_in_full.matched) {
    os << "reduced,," << format_double(m.reference) << ',' << format_double(m.found) << ",1\n";
  }
  for (double v : r.reduced_in_full.unmatched_reference) {
    os << "reduced,," << format_double(v) << ",,0\n";
  }
  for (const auto& e : r.printed) {
    os << "printed," << csv_field(e.label) << ',' << format_double(e.value) << ','
       << (e.in_reduced ? 1 : 0) << ',' << (e.in_full ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string to_csv(const GammaReport& r) {
  std::ostringstream os;
  os << "which,n1,n2,s,formula_n1,formula_n2,formula_amp,power_n1,power_n2,power_amp,abs_diff,match\n";
  auto image = [&](const GammaImage& g) {
    if (g.annihilated) return std::string(",,0");
    return std::to_string(g.state.n1) + ',' + std::to_string(g.state.n2) + ',' +
           format_double(g.amplitude);
  };
  for (const auto& row : r.rows) {
    os << to_string(r.kind) << ',' << row.state.n1 << ',' << row.state.n2 << ',' << row.state.s
       << ',' << image(row.formula) << ',' << image(row.power) << ','
       << format_double(row.abs_diff) << ',' << (row.match ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string to_table(const SpectrumRecord& s) {
  Table t({"#", "re", "im", "residual"});
  for (std::size_t i = 0; i < s.spectrum.eigenvalues.size(); ++i) {
    const auto& z = s.spectrum.eigenvalues[i];
    t.add({std::to_string(i), format_double(z.real()), format_double(z.imag()),
           i < s.spectrum.residuals.size() ? format_double(s.spectrum.residuals[i]) : "-"});
  }
  std::string head = to_string(s.model) + " j=" + std::to_string(s.j) + " (" +
                     to_string(s.spectrum.provenance) + ")\n";
  for (const auto& w : s.spectrum.warnings) head += "warning: " + w + "\n";
  return head + t.str();
}

std::string to_table(const AlgebraReport& r) {
  Table t({"relation", "residual", "status"});
  for (const auto& rel : r.relations) {
    t.add({rel.id, format_double(rel.residual),
           rel.informational ? (rel.passed ? "info:holds" : "info:fails")
                             : (rel.passed ? "ok" : "FAIL")});
  }
  return r.subject + ": " + (r.passed() ? "pass" : "FAIL") + "\n" + t.str();
}

std::string to_table(const ComparisonReport& r) {
  Table t({"reduced", "full", "diff"});
  for (const auto& m : r.reduced_in_full.matched) {
    t.add({format_double(m.reference), format_double(m.found), format_double(m.diff)});
  }
  for (double v : r.reduced_in_full.unmatched_reference) t.add({format_double(v), "-", "-"});
  Table p({"printed", "value", "in_reduced", "in_full"});
  for (const auto& e : r.printed) {
    p.add({e.label, format_double(e.value), yes_no(e.in_reduced), yes_no(e.in_full)});
  }
  std::string out = to_string(r.model) + " j=" + std::to_string(r.j) + " cutoffs " +
                    std::to_string(r.cutoffs[0]) + "x" + std::to_string(r.cutoffs[1]) + "\n" +
                    t.str();
  if (!r.printed.empty()) out += p.str();
  out += "image of the full operator: " + std::to_string(r.image_in_full.matched.size()) + "/" +
         std::to_string(r.image.size()) + " found in full\n";
  out += "embedding max_abs " + format_double(r.embedding_max_abs) + " frobenius " +
         format_double(r.embedding_frobenius) + "\n";
  return out;
}

std::string to_table(const GammaReport& r) {
  Table t({"state", "formula", "power", "diff", "match"});
  auto image = [](const GammaImage& g) {
    if (g.annihilated) return std::string("0");
    return format_double(g.amplitude) + " |" + std::to_string(g.state.n1) + "," +
           std::to_string(g.state.n2) + ">";
  };
  for (const auto& row : r.rows) {
    t.add({state_label(row.state), image(row.formula), image(row.power),
           format_double(row.abs_diff), yes_no(row.match)});
  }
  return to_string(r.kind) + ": " + std::to_string(r.mismatches()) + " mismatches\n" + t.str();
}

}  // namespace osp21::io

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

// osp21 command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "osp21/algebra.hpp"
#include "osp21/gamma.hpp"
#include "osp21/io.hpp"
#include "osp21/spectra.hpp"
#include "osp21/transform.hpp"

namespace {

using osp21::io::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Output {
  std::string format = "json";
  std::string path;
};

struct Rendered {
  json doc;
  std::string csv;
  std::string table;
};

std::string extension(const std::string& format) {
  return format == "json" ? "json" : format == "csv" ? "csv" : "txt";
}

void emit(const Output& out, const std::string& stem, const Rendered& r) {
  std::string text;
  if (out.format == "json") {
    text = r.doc.dump(2) + "\n";
  } else if (out.format == "csv") {
    text = r.csv;
  } else {
    text = r.table;
  }
  namespace fs = std::filesystem;
  const char* dir = std::getenv("OSP21_OUTPUT_DIR");
  fs::path target;
  if (!out.path.empty()) {
    target = out.path;
    if (target.is_relative() && dir && *dir) target = fs::path(dir) / target;
  } else if (dir && *dir) {
    target = fs::path(dir) / (stem + "." + extension(out.format));
  }
  if (target.empty()) {
    std::cout << text;
    return;
  }
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::ofstream f(target, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + target.string());
  f << text;
}

// ---------------------------------------------------------------------------
// Flat key = value config file. Keys are long option names without dashes.

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_config(const std::map<std::string, std::string>& kv, CLI::App& app, CLI::App* sub) {
  for (const auto& [key, value] : kv) {
    if (key == "config") throw UsageError("config: nested config files are not supported");
    CLI::Option* opt = nullptr;
    for (CLI::App* scope : {sub, &app}) {
      if (!scope || opt) continue;
      opt = scope->get_option_no_throw("--" + key);
      if (!opt) opt = scope->get_option_no_throw(key);  // positional
    }
    if (!opt) throw UsageError("config: unknown key '" + key + "'");
    if (opt->count() > 0) continue;  // command line wins
    std::istringstream tokens(value);
    std::string tok;
    while (tokens >> tok) opt->add_result(tok);
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config: bad value for '" + key + "': " + e.what());
    }
  }
}

// ---------------------------------------------------------------------------

struct ModelFlags {
  std::string model;
  int j = 1;
  std::optional<double> omega, omega0, kappa, lambda, l1, l2;

  void add_to(CLI::App* sub) {
    sub->add_option("model", model, "jck or mjc");
    sub->add_option("--j", j, "sector label (>= 1)");
    sub->add_option("--omega", omega, "field frequency");
    sub->add_option("--omega0", omega0, "atomic transition frequency");
    sub->add_option("--kappa", kappa, "JC-Kerr coupling");
    sub->add_option("--lambda", lambda, "Kerr coefficient");
    sub->add_option("--l1", l1, "modified-JC coupling to mode 1");
    sub->add_option("--l2", l2, "modified-JC coupling to mode 2");
  }

  osp21::Model parsed() const {
    if (model.empty()) throw UsageError("model (jck or mjc) is required");
    return osp21::parse_model(model);
  }

  osp21::JCKerrParams jck() const {
    if (l1 || l2) throw UsageError("--l1/--l2 apply to mjc only");
    osp21::JCKerrParams p;
    if (omega) p.omega = *omega;
    if (omega0) p.omega0 = *omega0;
    if (kappa) p.kappa = *kappa;
    if (lambda) p.lambda = *lambda;
    osp21::validate(p);
    return p;
  }

  osp21::MJCParams mjc() const {
    if (kappa || lambda) throw UsageError("--kappa/--lambda apply to jck only");
    osp21::MJCParams p;
    if (omega) p.omega = *omega;
    if (omega0) p.omega0 = *omega0;
    if (l1) p.lambda1 = *l1;
    if (l2) p.lambda2 = *l2;
    osp21::validate(p);
    return p;
  }
};

void require_j(int j) {
  if (j < 1) throw UsageError("--j must be >= 1");
}

void require_positive(double tol, const char* name) {
  if (!(tol > 0.0)) throw UsageError(std::string(name) + " must be > 0");
}

std::string concat_csv(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0) {
      out += parts[i];
    } else {
      const auto nl = parts[i].find('\n');
      if (nl != std::string::npos) out += parts[i].substr(nl + 1);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

struct VerifyFlags {
  std::string realization;
  std::string tag;
  int j = 3;
  std::vector<int> cutoffs{12, 12};
  int margin = 2;
  double tol = 1e-10;
  std::string source = "derived";
  bool intertwining = false;
  bool generators = false;
};

int run_verify(const VerifyFlags& f, const Output& out) {
  require_positive(f.tol, "--tol");
  if (f.margin < 0) throw UsageError("--margin must be >= 0");
  if (f.cutoffs.size() != 2) throw UsageError("--cutoffs takes two values");
  const int c1 = f.cutoffs[0];
  const int c2 = f.cutoffs[1];
  if (c1 < f.margin + 2 || c2 < f.margin + 2) {
    throw UsageError("--cutoffs must be >= margin + 2");
  }
  const auto source = osp21::parse_form_source(f.source);

  std::vector<osp21::RealizationKind> kinds;
  std::vector<osp21::TransformTag> tags;
  const bool everything = f.realization.empty() && f.tag.empty();
  if (everything || f.realization == "all") {
    kinds = {osp21::RealizationKind::ferm_a, osp21::RealizationKind::ferm_b};
  } else if (!f.realization.empty()) {
    kinds = {osp21::parse_realization(f.realization)};
  }
  if (everything || f.tag == "all") {
    tags.assign(std::begin(osp21::kAllTags), std::end(osp21::kAllTags));
  } else if (!f.tag.empty()) {
    tags = {osp21::parse_tag(f.tag)};
  }
  if (!tags.empty()) require_j(f.j);

  const osp21::FockSpace space(c1, c2);
  std::vector<osp21::AlgebraReport> reports;
  json invariance = json::array();
  json generators = json::array();
  for (auto kind : kinds) {
    const auto g = osp21::build_generators(space, kind);
    reports.push_back(osp21::verify_algebra(g, f.margin, f.tol));
    reports.push_back(osp21::verify_qpm_closure(g, f.margin, f.tol));
  }
  for (const auto& tag : tags) {
    reports.push_back(osp21::verify_transformed_algebra(f.j, tag, source));
    const auto inv = osp21::check_basis_invariance(tag, f.j, source);
    invariance.push_back({{"tag", osp21::to_string(tag)},
                          {"j", f.j},
                          {"leaks", inv.leaks},
                          {"back_leaks", inv.back_leaks}});
    if (f.intertwining) reports.push_back(osp21::verify_intertwining(space, tag, f.tol));
    if (f.generators) {
      generators.push_back(
          osp21::io::to_json(osp21::build_transformed_generators(f.j, tag, source), f.j, tag));
    }
  }

  bool passed = true;
  json list = json::array();
  std::vector<std::string> csv;
  std::string table;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    list.push_back(osp21::io::to_json(r));
    csv.push_back(osp21::io::to_csv(r));
    table += osp21::io::to_table(r) + "\n";
  }
  json payload{{"passed", passed}, {"reports", std::move(list)}};
  if (!invariance.empty()) payload["invariance"] = std::move(invariance);
  if (f.generators) payload["generators"] = std::move(generators);
  emit(out, "verify-algebra", {osp21::io::document("verify-algebra", payload), concat_csv(csv), table});
  return passed ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct SpectrumFlags {
  ModelFlags m;
  std::string method;
  double tol = 1e-10;
};

json printed_audit(const std::vector<osp21::LabeledValue>& values,
                   const std::vector<double>& spectrum) {
  json out = json::array();
  for (const auto& v : values) {
    const auto hit = osp21::match_multiset({v.value}, spectrum, 1e-9, 0.0);
    out.push_back({{"label", v.label}, {"value", v.value}, {"found", hit.all_found()}});
  }
  return out;
}

int run_spectrum(const SpectrumFlags& f, const Output& out) {
  require_j(f.m.j);
  require_positive(f.tol, "--tol");
  const auto model = f.m.parsed();
  osp21::io::SpectrumRecord rec;
  rec.model = model;
  rec.j = f.m.j;
  const int j = f.m.j;
  auto sorted_real = [](const osp21::Spectrum& s) {
    auto r = s.real_parts();
    std::sort(r.begin(), r.end());
    return r;
  };

  if (model == osp21::Model::jck) {
    const auto p = f.m.jck();
    const std::string method = f.method.empty() ? "recurrence" : f.method;
    rec.params = osp21::io::to_json(p);
    const auto dense = osp21::eigen_dense(osp21::build_jck_reduced(j, p));
    if (method == "recurrence") {
      rec.spectrum = osp21::jck_recurrence(j, p);
    } else if (method == "dense") {
      rec.spectrum = dense;
    } else {
      throw UsageError("--method for jck must be recurrence or dense");
    }
    const auto other = method == "dense" ? sorted_real(osp21::jck_recurrence(j, p)) : sorted_real(dense);
    const auto cross = osp21::match_multiset(sorted_real(rec.spectrum), other, 1e-9, 1e-9);
    rec.audit = osp21::io::to_json(cross);
    rec.audit["recurrence_diff"] = osp21::io::to_json(osp21::jck_recurrence_diff(j, p));
    const auto printed = osp21::jck_printed_values(j, p);
    if (!printed.empty()) rec.audit["printed"] = printed_audit(printed, sorted_real(rec.spectrum));
  } else {
    const auto p = f.m.mjc();
    const std::string method = f.method.empty() ? "closed-form" : f.method;
    rec.params = osp21::io::to_json(p);
    const auto dense = osp21::eigen_dense(osp21::build_mjc_reduced(j, p));
    if (method == "closed-form") {
      rec.spectrum = osp21::mjc_closed_form_spectrum(j, p, f.tol);
    } else if (method == "dense") {
      rec.spectrum = dense;
    } else {
      throw UsageError("--method for mjc must be closed-form or dense");
    }
    const auto other = method == "dense" ? sorted_real(osp21::mjc_closed_form_spectrum(j, p, f.tol))
                                         : sorted_real(dense);
    rec.audit = osp21::io::to_json(osp21::match_multiset(sorted_real(rec.spectrum), other, 1e-9, 1e-9));
    json forms = json::array();
    std::vector<osp21::LabeledValue> printed;
    for (int n = 0; n <= j; ++n) {
      forms.push_back(osp21::io::to_json(osp21::mjc_closed_form(j, n, p, f.tol)));
      for (int sign : {-1, 1}) {
        printed.push_back({"n=" + std::to_string(n) + (sign > 0 ? ",+" : ",-"),
                           osp21::mjc_printed_eigenvalue(j, n, p, sign)});
      }
    }
    rec.audit["closed_form"] = std::move(forms);
    rec.audit["printed"] = printed_audit(printed, sorted_real(rec.spectrum));
  }
  const std::string stem = "spectrum-" + osp21::to_string(model) + "-j" + std::to_string(j);
  emit(out, stem,
       {osp21::io::document("spectrum", osp21::io::to_json(rec)), osp21::io::to_csv(rec),
        osp21::io::to_table(rec)});
  return kOk;
}

// ---------------------------------------------------------------------------

struct CompareFlags {
  ModelFlags m;
  std::vector<int> cutoffs;
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
};

int run_compare(const CompareFlags& f, const Output& out) {
  require_j(f.m.j);
  require_positive(f.abs_tol, "--abs-tol");
  if (f.rel_tol < 0) throw UsageError("--rel-tol must be >= 0");
  const auto model = f.m.parsed();
  std::vector<int> c = f.cutoffs;
  if (c.empty()) c = {std::max(8, f.m.j + 4), std::max(8, f.m.j + 4)};
  if (c.size() != 2) throw UsageError("--cutoffs takes two values");
  if (c[0] < f.m.j + 4 || c[1] < f.m.j + 4) throw UsageError("--cutoffs must be >= j + 4");
  const osp21::FockSpace space(c[0], c[1]);
  const auto rep = model == osp21::Model::jck
                       ? osp21::compare_reduced_vs_full(f.m.j, f.m.jck(), space, f.abs_tol, f.rel_tol)
                       : osp21::compare_reduced_vs_full(f.m.j, f.m.mjc(), space, f.abs_tol, f.rel_tol);
  json payload = osp21::io::to_json(rep);
  payload["params"] = model == osp21::Model::jck ? osp21::io::to_json(f.m.jck())
                                                 : osp21::io::to_json(f.m.mjc());
  const std::string stem = "compare-" + osp21::to_string(model) + "-j" + std::to_string(f.m.j);
  emit(out, stem,
       {osp21::io::document("compare", payload), osp21::io::to_csv(rep), osp21::io::to_table(rep)});
  return rep.reduced_in_full.all_found() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------

struct GammaFlags {
  int max_total = 10;
  std::string which = "both";
  double tol = 1e-12;
};

int run_gamma(const GammaFlags& f, const Output& out) {
  if (f.max_total < 0) throw UsageError("--max-total must be >= 0");
  require_positive(f.tol, "--tol");
  std::vector<osp21::GammaKind> kinds;
  if (f.which == "both") {
    kinds = {osp21::GammaKind::gamma1, osp21::GammaKind::gamma2};
  } else {
    kinds = {osp21::parse_gamma_kind(f.which)};
  }
  bool ok = true;
  json reports = json::array();
  std::vector<std::string> csv;
  std::string table;
  for (auto k : kinds) {
    const auto r = osp21::gamma_report(k, f.max_total, f.tol);
    // Only the first operator is a gate; the second is a comparison report.
    if (k == osp21::GammaKind::gamma1 && r.mismatches() > 0) ok = false;
    reports.push_back(osp21::io::to_json(r));
    csv.push_back(osp21::io::to_csv(r));
    table += osp21::io::to_table(r) + "\n";
  }
  emit(out, "gamma",
       {osp21::io::document("gamma", {{"passed", ok}, {"reports", reports}}), concat_csv(csv), table});
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"osp21: superalgebra realizations, similarity transforms and QES spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::string config;
  app.add_option("--format", out.format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output", out.path, "output file (default stdout or $OSP21_OUTPUT_DIR)");
  app.add_option("--config", config, "flat key = value file; command-line flags win");

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify-algebra", "check the (anti)commutation table");
  verify->add_option("--realization", vf.realization, "ferma, fermb or all");
  verify->add_option("--tag", vf.tag, "s+1, s-1, t+1, t-1 or all");
  verify->add_option("--j", vf.j, "sector label for transformed tags");
  verify->add_option("--cutoffs", vf.cutoffs, "boson cutoffs C1 C2")->expected(2);
  verify->add_option("--margin", vf.margin, "interior margin");
  verify->add_option("--tol", vf.tol, "residual tolerance");
  verify->add_option("--source", vf.source, "derived or printed transformed forms");
  verify->add_flag("--intertwining", vf.intertwining, "also run the metric intertwining checks");
  verify->add_flag("--generators", vf.generators, "include transformed generator matrices");

  SpectrumFlags sf;
  auto* spectrum = app.add_subcommand("spectrum", "sector spectrum of jck or mjc");
  sf.m.add_to(spectrum);
  spectrum->add_option("--method", sf.method, "recurrence, dense or closed-form");
  spectrum->add_option("--tol", sf.tol, "eigenfunction residual tolerance");

  CompareFlags cf;
  auto* compare = app.add_subcommand("compare", "reduced sector vs full Fock spectrum");
  cf.m.add_to(compare);
  compare->add_option("--cutoffs", cf.cutoffs, "boson cutoffs C1 C2")->expected(2);
  compare->add_option("--abs-tol", cf.abs_tol, "absolute matching tolerance");
  compare->add_option("--rel-tol", cf.rel_tol, "relative matching tolerance");

  GammaFlags gf;
  auto* gamma = app.add_subcommand("gamma", "Gamma-operator action table");
  gamma->add_option("--max-total", gf.max_total, "largest n1 + n2");
  gamma->add_option("--which", gf.which, "gamma1, gamma2 or both");
  gamma->add_option("--tol", gf.tol, "entrywise tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (!config.empty()) apply_config(read_config(config), app, sub);
    if (sub == verify) return run_verify(vf, out);
    if (sub == spectrum) return run_spectrum(sf, out);
    if (sub == compare) return run_compare(cf, out);
    return run_gamma(gf, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

// Copyright 2026 The anyonkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "anyon/braid.hpp"
#include "anyon/catalog.hpp"
#include "anyon/closure.hpp"
#include "anyon/identities.hpp"
#include "anyon/presentation.hpp"
#include "anyon/todd_coxeter.hpp"
#include "anyon/tqft.hpp"
#include "anyon/verify.hpp"

using nlohmann::ordered_json;

namespace {

struct GlobalOptions {
  unsigned field = 72;
  bool json = false;
  bool no_timestamp = false;
};

std::string timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

void emit(const GlobalOptions& g, ordered_json& doc, const std::string& out_path) {
  if (!g.no_timestamp) doc["generated_at"] = timestamp_now();
  std::string text = doc.dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
    std::cout << "wrote " << out_path << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<anyon::Charge> parse_leaves(const std::string& text) {
  std::vector<anyon::Charge> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(static_cast<anyon::Charge>(std::stoul(tok)));
  return out;
}

ordered_json report_to_json(const anyon::Report& r) {
  return ordered_json::parse(r.to_json());
}

int run_verify(const GlobalOptions& g, const std::string& suite,
               const std::string& corrupt_name, std::size_t cap) {
  anyon::Catalog cat(g.field);
  if (!corrupt_name.empty()) cat.corrupt(corrupt_name);

  std::vector<anyon::Report> reports;
  if (suite == "all") {
    reports = anyon::verify_all(cat, cap);
  } else if (suite == "identities") {
    reports.push_back(anyon::identity_suite(cat));
  } else if (suite == "tqft") {
    reports.push_back(anyon::verify_tqft(cat));
  } else if (suite == "presentation") {
    reports.push_back(anyon::verify_presentation(cat));
  } else if (suite == "closure") {
    reports.push_back(anyon::verify_closure(cat, cap));
  } else {
    throw CLI::ValidationError("unknown suite: " + suite);
  }

  bool ok = true;
  std::size_t checks = 0;
  for (const auto& r : reports) {
    ok = ok && r.all_pass();
    checks += r.checks.size();
  }
  if (g.json) {
    ordered_json doc;
    doc["suite"] = suite;
    doc["field_order"] = g.field;
    doc["pass"] = ok;
    doc["reports"] = ordered_json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
    emit(g, doc, "");
  } else {
    std::size_t fails = 0;
    for (const auto& r : reports) {
      std::cout << "== " << r.suite << " ==\n" << r.to_text();
      fails += r.fail_count();
    }
    std::cout << (ok ? "OK" : "FAILED") << ": " << checks << " checks, " << fails
              << " failures\n";
  }
  return ok ? 0 : 1;
}

int run_closure(const GlobalOptions& g, const std::string& gens,
                const std::string& mode, std::size_t cap,
                const std::string& out_path, bool no_elements) {
  anyon::Catalog cat(g.field);
  std::vector<anyon::ExactMatrix> mats;
  std::vector<std::string> names;
  std::stringstream ss(gens);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    names.push_back(tok);
    mats.push_back(cat.get(tok));
  }
  anyon::ClosureMode m = mode == "pu" ? anyon::ClosureMode::kModCenter
                                      : anyon::ClosureMode::kExact;
  anyon::GroupClosure closure = anyon::GroupClosure::closure(mats, names, m, cap);
  ordered_json doc = ordered_json::parse(closure.to_json(!no_elements));
  if (g.json || !out_path.empty()) {
    emit(g, doc, out_path);
  } else {
    std::cout << "order " << closure.size() << " (mode " << mode << ")\n";
    std::cout << "fingerprint " << closure.fingerprint().to_json() << "\n";
  }
  return 0;
}

int run_braid(const GlobalOptions& g, const std::string& leaves_text,
              unsigned total, const std::string& word_text,
              const std::string& state_text) {
  anyon::Theory th(g.field);
  anyon::FusionSpace space(th, parse_leaves(leaves_text), total);
  anyon::BraidWord word = anyon::BraidWord::parse(word_text);
  anyon::BraidStep step = anyon::compose_word(space, word);

  ordered_json doc;
  doc["space"] = space.describe();
  doc["dim"] = space.dim();
  doc["word"] = word.to_string();
  doc["matrix"] = ordered_json::parse(step.matrix.to_json());
  ordered_json leaf_out = ordered_json::array();
  for (anyon::Charge c : step.target.leaves()) leaf_out.push_back(c);
  doc["leaf_out"] = leaf_out;
  if (!state_text.empty()) {
    if (state_text[0] != 'e')
      throw CLI::ValidationError("state must be e<k>, a basis index");
    unsigned idx = static_cast<unsigned>(std::stoul(state_text.substr(1)));
    if (idx == 0 || idx > space.dim())
      throw CLI::ValidationError("basis index out of range");
    anyon::StateVector v =
        anyon::StateVector::basis_state(space.dim(), g.field, idx - 1);
    doc["state_in"] = state_text;
    doc["state_out"] = ordered_json::parse(step.matrix.apply(v).to_json());
  }
  if (g.json) {
    emit(g, doc, "");
  } else {
    std::cout << "space " << space.describe() << ", dim " << space.dim() << "\n";
    std::cout << step.matrix.pretty() << "\n";
    std::cout << "leaves out: " << step.target.describe() << "\n";
    if (doc.contains("state_out"))
      std::cout << "state out: " << doc["state_out"].dump() << "\n";
  }
  return 0;
}

int run_ancilla(const GlobalOptions& g, const std::string& target) {
  anyon::Theory th(g.field);
  anyon::AncillaResult res = anyon::ancilla_protocol(th, target == "plus");
  if (g.json) {
    ordered_json doc = ordered_json::parse(res.to_json());
    emit(g, doc, "");
  } else {
    std::cout << "target " << res.target << ", start |" << res.start_label
              << ">, braid word " << res.word.to_string() << "\n";
    std::cout << "final space " << res.space.describe() << "\n";
    std::cout << "coefficients: |1> " << res.state.at(0).pretty_phase() << ", |3> "
              << res.state.at(1).pretty_phase() << "\n";
    std::cout << "moduli exactly 1/sqrt(2): " << (res.moduli_are_half ? "yes" : "no")
              << ", relative phase " << res.relative_phase.pretty_phase()
              << ", target reached: " << (res.target_reached ? "yes" : "no") << "\n";
    std::cout << "reachable relative phases on the 1221 qubit:";
    for (const auto& p : res.reachable_relative_phases)
      std::cout << " " << p.pretty_phase();
    std::cout << "\n";
  }
  return res.moduli_are_half ? 0 : 1;
}

int run_coset_enum(const GlobalOptions& g, const std::string& pres_path,
                   const std::string& subgroup_text, std::size_t limit) {
  std::ifstream f(pres_path);
  if (!f) throw std::runtime_error("cannot read " + pres_path);
  std::stringstream buf;
  buf << f.rdbuf();
  anyon::GroupPresentation pres = anyon::GroupPresentation::from_text(buf.str());
  std::vector<anyon::Word> subgroup;
  if (!subgroup_text.empty()) {
    std::stringstream ss(subgroup_text);
    std::string tok;
    while (std::getline(ss, tok, ','))
      subgroup.push_back(pres.parse_word(tok));
  }
  try {
    anyon::CosetEnumResult res = anyon::todd_coxeter(pres, subgroup, limit);
    if (g.json) {
      ordered_json doc;
      doc["presentation"] = pres_path;
      doc["index"] = res.index;
      doc["total_defined"] = res.total_defined;
      emit(g, doc, "");
    } else {
      std::cout << "index " << res.index << " (defined " << res.total_defined
                << " cosets along the way)\n";
    }
  } catch (const anyon::CosetLimitExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_dump_tqft(const GlobalOptions& g) {
  anyon::Theory th(g.field);
  ordered_json doc = ordered_json::parse(th.dump_json());
  emit(g, doc, "");
  return 0;
}

int run_catalog(const GlobalOptions& g, const std::string& only) {
  anyon::Catalog cat(g.field);
  if (g.json) {
    ordered_json doc;
    for (const auto& name : cat.names()) {
      if (!only.empty() && name != only) continue;
      doc[name] = ordered_json::parse(cat.get(name).to_json());
    }
    emit(g, doc, "");
  } else {
    for (const auto& name : cat.names()) {
      if (!only.empty() && name != only) continue;
      std::cout << name << " =\n" << cat.get(name).pretty() << "\n\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact braid matrices and the order-648 qutrit gate group"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--field", g.field, "cyclotomic field order (default 72)")
      ->envname("ANYON_FIELD_ORDER");
  app.add_flag("--json", g.json, "machine-readable JSON output");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output (default)");
  app.add_flag("--no-timestamp", g.no_timestamp,
               "omit the generated_at field for byte-identical reruns");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "all|identities|tqft|presentation|closure");
  std::string corrupt_name;
  verify->add_option("--corrupt", corrupt_name,
                     "negative control: corrupt one catalog entry first");
  std::size_t cap = 10000;
  verify->add_option("--cap", cap, "closure element cap");

  auto* closure = app.add_subcommand("closure", "enumerate a matrix group closure");
  std::string gens = "G1t,G2t,FUMt";
  closure->add_option("--gens", gens, "comma-separated catalog generator names");
  std::string mode = "exact";
  closure->add_option("--mode", mode, "exact|pu")
      ->check(CLI::IsMember({"exact", "pu"}));
  std::size_t ccap = 10000;
  closure->add_option("--cap", ccap, "element cap");
  std::string out_path;
  closure->add_option("--out", out_path, "write the closure JSON to a file");
  bool no_elements = false;
  closure->add_flag("--no-elements", no_elements, "omit the element list");

  auto* braid = app.add_subcommand("braid", "compose a braid word on a fusion space");
  std::string leaves = "2,2,2,2";
  braid->add_option("--leaves", leaves, "comma-separated leaf charges")->required();
  unsigned total = 0;
  braid->add_option("--total", total, "total charge")->required();
  std::string word_text;
  braid->add_option("--word", word_text, "braid word, e.g. s2:-1,s1:1");
  std::string state_text;
  braid->add_option("--state", state_text, "initial basis state e<k> (1-based)");

  auto* ancilla = app.add_subcommand("ancilla", "prepare the 1221 qubit ancillas");
  std::string target = "plus";
  ancilla->add_option("--target", target, "plus|minus")
      ->check(CLI::IsMember({"plus", "minus"}));

  auto* coset = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  std::string pres_path;
  coset->add_option("--pres", pres_path, "presentation file")->required();
  std::string subgroup_text;
  coset->add_option("--subgroup", subgroup_text, "comma-separated subgroup words");
  std::size_t limit = 100000;
  coset->add_option("--limit", limit, "coset limit");

  app.add_subcommand("dump-tqft", "emit all F/R/theta/dimension tables");

  auto* catalog_cmd = app.add_subcommand("catalog", "print the named generators");
  std::string only;
  catalog_cmd->add_option("--name", only, "print a single matrix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("verify")) return run_verify(g, suite, corrupt_name, cap);
    if (app.got_subcommand("closure"))
      return run_closure(g, gens, mode, ccap, out_path, no_elements);
    if (app.got_subcommand("braid"))
      return run_braid(g, leaves, total, word_text, state_text);
    if (app.got_subcommand("ancilla")) return run_ancilla(g, target);
    if (app.got_subcommand("coset-enum"))
      return run_coset_enum(g, pres_path, subgroup_text, limit);
    if (app.got_subcommand("dump-tqft")) return run_dump_tqft(g);
    if (app.got_subcommand("catalog")) return run_catalog(g, only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

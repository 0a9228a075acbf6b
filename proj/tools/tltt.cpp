// Batch driver: checks .2ltt files, verifies the corpus, and runs the
// combinatorics and semantics harnesses.
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tltt/combinat.hpp"
#include "tltt/cwf.hpp"
#include "tltt/kernel.hpp"
#include "tltt/stdlib_runner.hpp"
#include "tltt/surface.hpp"
#include "tltt/twolevel.hpp"

using nlohmann::json;
using namespace tltt;

namespace {

// JSON reports carry elapsed_ms = 0 so that identical inputs produce
// byte-identical output; wall time goes to stderr instead.
json report_to_json(const ModuleReport& rep) {
  json decls = json::array();
  for (const auto& d : rep.decls) {
    json jd;
    jd["name"] = d.name;
    jd["status"] = d.accepted ? "accepted" : "rejected";
    if (!d.accepted) {
      jd["error"] = {{"code", to_string(*d.error)},
                     {"message", d.message},
                     {"line", d.line},
                     {"col", d.col}};
    }
    decls.push_back(jd);
  }
  return json{{"file", rep.file}, {"decls", decls}, {"elapsed_ms", 0}};
}

void print_report_human(const ModuleReport& rep) {
  for (const auto& d : rep.decls) {
    if (d.accepted) {
      std::cout << "  ok   " << d.name << "\n";
    } else {
      std::cout << "  FAIL " << d.name << " [" << to_string(*d.error) << "] at " << d.line << ":"
                << d.col << ": " << d.message << "\n";
    }
  }
}

uint64_t default_seed() {
  if (const char* s = std::getenv("TLTT_SEED")) return std::strtoull(s, nullptr, 10);
  return 42;
}

int cmd_check(const std::vector<std::string>& files, const std::vector<std::string>& axiom_flags,
              bool as_json) {
  AxiomRegistry axioms;
  for (const auto& a : axiom_flags) {
    try {
      axioms.enable(a);
    } catch (const TypeError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  GlobalEnv env;
  bool all_ok = true;
  json out = json::array();
  for (const auto& f : files) {
    std::string text;
    try {
      text = read_file(f);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    ModuleReport rep = check_source(f, text, env, axioms);
    if (!rep.all_accepted()) all_ok = false;
    if (as_json) {
      out.push_back(report_to_json(rep));
    } else {
      std::cout << f << ":\n";
      print_report_human(rep);
    }
    std::cerr << f << ": " << rep.elapsed_ms << " ms\n";
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

int cmd_stdlib(const std::string& manifest_path, const std::string& root, bool as_json) {
  std::vector<ManifestEntry> manifest;
  try {
    manifest = load_manifest(manifest_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  CorpusResult res = verify_corpus(manifest, root);
  if (as_json) {
    json files = json::array();
    for (const auto& f : res.files) {
      json jf;
      jf["path"] = f.entry.path;
      jf["anchor"] = f.entry.anchor;
      jf["expect"] = f.entry.expect_accept ? "accepted" : "rejected";
      jf["ok"] = f.ok;
      if (!f.ok) jf["detail"] = f.detail;
      jf["report"] = report_to_json(f.report);
      files.push_back(jf);
    }
    std::cout << json{{"files", files}, {"all_ok", res.all_ok}}.dump(2) << "\n";
  } else {
    for (const auto& f : res.files) {
      std::cout << (f.ok ? "ok   " : "FAIL ") << f.entry.path;
      if (!f.entry.expect_accept) std::cout << " (expected " << f.entry.expected_error << ")";
      if (!f.ok) std::cout << "\n     " << f.detail;
      std::cout << "\n";
    }
    std::cout << (res.all_ok ? "corpus: all expectations met" : "corpus: MISMATCHES") << " ("
              << res.files.size() << " files)\n";
  }
  std::cerr << "stdlib: " << res.elapsed_ms << " ms\n";
  return res.all_ok ? 0 : 1;
}

int cmd_trees(int max_n, bool verify, bool table) {
  using namespace tltt::comb;
  bool ok = true;
  std::string counts;
  for (int n = 0; n <= max_n; ++n) {
    auto trees = enum_trees(n);
    counts += (n ? "," : "") + std::to_string(trees.size());
    if (verify) {
      auto balanced = enum_balanced(n);
      if (balanced.size() != trees.size()) {
        std::cout << "count mismatch at n=" << n << ": trees " << trees.size() << " vs balanced "
                  << balanced.size() << "\n";
        ok = false;
      }
      std::set<std::string> images;
      for (const auto& t : trees) {
        ParenString s = tree_to_parens(t);
        if (!is_balanced(s, 0) || static_cast<int>(s.size()) != 2 * n) ok = false;
        if (!tree_eq(parens_to_tree(s), t)) ok = false;
        images.insert(parens_to_display(s));
      }
      for (const auto& s : balanced) {
        if (images.count(parens_to_display(s)) == 0) ok = false;
        if (parens_to_display(tree_to_parens(parens_to_tree(s))) != parens_to_display(s))
          ok = false;
      }
    }
  }
  std::cout << counts << "\n";
  if (table) {
    for (const auto& t : enum_trees(std::min(max_n, 3)))
      std::cout << internal_nodes(t) << " nodes -> \"" << parens_to_display(tree_to_parens(t))
                << "\"\n";
  }
  if (verify) std::cout << (ok ? "bijection verified" : "bijection FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_cwf_laws(const std::string& spec_path, int trials, uint64_t seed, int mutate,
                 bool as_json) {
  cwf::LawCaps caps;
  cwf::LawReport rep;
  if (!spec_path.empty()) {
    try {
      cwf::SpecFile sf = cwf::load_spec_file(spec_path);
      if (auto err = cwf::validate_category(sf.category)) {
        std::cout << "category: " << *err << "\n";
        return 1;
      }
      if (sf.presheaf) {
        if (auto err = cwf::validate_presheaf(*sf.presheaf)) {
          std::cout << "presheaf: " << *err << "\n";
          return 1;
        }
        std::mt19937_64 rng(seed);
        cwf::check_cwf_laws_instance(*sf.presheaf, cwf::random_deptype(*sf.presheaf, rng, 3, 1),
                                     rep, caps, rng);
        rep.instances += 1;
      }
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  cwf::LawReport rnd = cwf::check_cwf_laws(seed, trials, caps, mutate);
  rep.instances += rnd.instances;
  rep.laws_checked += rnd.laws_checked;
  for (auto& f : rnd.failures) rep.failures.push_back(std::move(f));

  if (as_json) {
    json j{{"instances", rep.instances},
           {"laws_checked", rep.laws_checked},
           {"failures", rep.failures},
           {"seed", seed}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "instances: " << rep.instances << ", laws checked: " << rep.laws_checked << "\n";
    for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    std::cout << (rep.ok() ? "all laws hold" : "law failures found") << "\n";
  }
  if (mutate != 0) return rep.ok() ? 1 : 0;  // a seeded mutation must be caught
  return rep.ok() ? 0 : 1;
}

int cmd_cofib(int bound, int trials, uint64_t seed, int size_cap, int ctx_cap, bool mutate,
              bool as_json) {
  twolevel::CofibReport rep =
      twolevel::verify_cofibrant_exonat(bound, size_cap, ctx_cap, trials, seed, mutate);
  if (as_json) {
    std::cout << rep.to_json() << "\n";
  } else {
    std::cout << "bound k=" << rep.bound << " trials=" << rep.trials
              << " ty_iso=" << (rep.ty_iso ? "pass" : "fail")
              << " contractibility=" << (rep.contractibility ? "pass" : "fail")
              << " fig4=" << (rep.naturality_fig4 ? "pass" : "fail")
              << " fig5=" << (rep.naturality_fig5 ? "pass" : "fail") << "\n";
    for (const auto& w : rep.witnesses) std::cout << "witness: " << w << "\n";
    std::cout << "note: this verifies the bounded truncation at k=" << rep.bound
              << " only, not the unbounded statement\n";
  }
  if (mutate) return rep.ok() ? 1 : 0;
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-level type theory checker and finite-model engine"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "type-check .2ltt files in order");
  std::vector<std::string> files, axiom_flags;
  bool check_json = false;
  check->add_option("files", files, "files to check")->required();
  check->add_option("--axiom", axiom_flags, "enable a registry axiom");
  check->add_flag("--json", check_json, "emit a JSON report");

  // stdlib
  auto* stdlib = app.add_subcommand("stdlib", "verify the corpus against its manifest");
  std::string manifest = "stdlib/manifest.json";
  std::string root;
  bool stdlib_json = false;
  stdlib->add_option("--manifest", manifest, "manifest path");
  stdlib->add_option("--root", root, "directory the manifest paths are relative to");
  stdlib->add_flag("--json", stdlib_json, "emit a JSON report");

  // trees
  auto* trees = app.add_subcommand("trees", "tree/parenthesization oracle");
  int max_n = 8;
  bool verify = false, table = false;
  trees->add_option("--max", max_n, "max internal nodes")->check(CLI::Range(0, 12));
  trees->add_flag("--verify", verify, "verify the bijection both ways");
  trees->add_flag("--table", table, "print a small tree -> parens table");

  // cwf laws
  auto* cwfcmd = app.add_subcommand("cwf", "presheaf CwF law suites");
  auto* laws = cwfcmd->add_subcommand("laws", "run the law checker");
  std::string spec_path;
  int trials = 100;
  uint64_t seed = default_seed();
  int mutate = 0;
  bool laws_json = false;
  laws->add_option("--spec", spec_path, "category/presheaf JSON spec file");
  laws->add_option("--trials", trials, "random instances");
  laws->add_option("--seed", seed, "RNG seed");
  laws->add_option("--mutate", mutate, "seeded mutation kind (1..7); exit 0 iff caught");
  laws->add_flag("--json", laws_json, "emit a JSON report");

  // cofib
  auto* cofib = app.add_subcommand("cofib", "bounded cofibrant-exo-nat verification");
  int bound = 2, cof_trials = 50, size_cap = 2, ctx_cap = 2;
  uint64_t cof_seed = default_seed();
  bool cof_mutate = false, cof_json = false;
  cofib->add_option("--bound", bound, "exo-nat truncation k")->check(CLI::Range(1, 4));
  cofib->add_option("--trials", cof_trials, "sampled (Delta, sigma, Y) trials");
  cofib->add_option("--seed", cof_seed, "RNG seed");
  cofib->add_option("--size-cap", size_cap, "fiber size cap s");
  cofib->add_option("--ctx-cap", ctx_cap, "base context size cap");
  cofib->add_flag("--mutate", cof_mutate, "use a seeded non-natural Theta; exit 0 iff caught");
  cofib->add_flag("--json", cof_json, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(files, axiom_flags, check_json);
    if (stdlib->parsed()) return cmd_stdlib(manifest, root.empty() ? "." : root, stdlib_json);
    if (trees->parsed()) return cmd_trees(max_n, verify, table);
    if (cwfcmd->parsed() && laws->parsed())
      return cmd_cwf_laws(spec_path, trials, seed, mutate, laws_json);
    if (cofib->parsed())
      return cmd_cofib(bound, cof_trials, cof_seed, size_cap, ctx_cap, cof_mutate, cof_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

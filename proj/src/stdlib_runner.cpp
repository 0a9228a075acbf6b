#include "tltt/stdlib_runner.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tltt/surface.hpp"

namespace tltt {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ManifestEntry> load_manifest(const std::string& manifest_path) {
  nlohmann::json j = nlohmann::json::parse(read_file(manifest_path));
  std::vector<ManifestEntry> out;
  for (const auto& e : j) {
    ManifestEntry m;
    m.path = e.at("path").get<std::string>();
    m.anchor = e.value("anchor", std::string{});
    m.expect_accept = e.at("expect").get<std::string>() == "accepted";
    if (e.contains("axioms"))
      for (const auto& a : e["axioms"]) m.axioms.push_back(a.get<std::string>());
    m.expected_error = e.value("expected_error", std::string{});
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// First rejection decides the file's error code.
const DeclOutcome* first_rejection(const ModuleReport& rep) {
  for (const auto& d : rep.decls)
    if (!d.accepted) return &d;
  return nullptr;
}

}  // namespace

CorpusResult verify_corpus(const std::vector<ManifestEntry>& manifest, const std::string& root) {
  CorpusResult result;
  auto t0 = std::chrono::steady_clock::now();
  GlobalEnv env;

  for (const auto& entry : manifest) {
    FileVerdict v;
    v.entry = entry;
    v.ok = true;
    AxiomRegistry axioms;
    for (const auto& a : entry.axioms) {
      try {
        axioms.enable(a);
      } catch (const TypeError& e) {
        v.ok = false;
        v.detail = std::string("manifest axiom: ") + e.what();
      }
    }
    std::string text;
    try {
      text = read_file(root + "/" + entry.path);
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = e.what();
      result.files.push_back(std::move(v));
      result.all_ok = false;
      continue;
    }

    if (entry.expect_accept) {
      ModuleReport rep = check_source(entry.path, text, env, axioms);
      const DeclOutcome* bad = first_rejection(rep);
      if (bad) {
        v.ok = false;
        v.detail = "declaration '" + bad->name + "' rejected: " +
                   std::string(to_string(*bad->error)) + ": " + bad->message;
      }
      v.report = std::move(rep);
    } else {
      GlobalEnv scratch = env;  // rejected files must not pollute later ones
      ModuleReport rep = check_source(entry.path, text, scratch, axioms);
      const DeclOutcome* bad = first_rejection(rep);
      if (!bad) {
        v.ok = false;
        v.detail = "expected rejection (" + entry.expected_error + ") but all declarations passed";
      } else {
        std::string got = to_string(*bad->error);
        if (got != entry.expected_error) {
          v.ok = false;
          v.detail = "expected " + entry.expected_error + ", got " + got + ": " + bad->message;
        }
      }
      v.report = std::move(rep);
    }
    if (!v.ok) result.all_ok = false;
    result.files.push_back(std::move(v));
  }

  auto t1 = std::chrono::steady_clock::now();
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return result;
}

}  // namespace tltt

// Corpus driver: loads the manifest, checks each `.2ltt` file in order
// against its expected outcome, threading accepted globals through the run.
#pragma once

#include <string>
#include <vector>

#include "tltt/kernel.hpp"

namespace tltt {

struct ManifestEntry {
  std::string path;
  std::string anchor;             // which result of the source material it encodes
  bool expect_accept = true;
  std::vector<std::string> axioms;
  std::string expected_error;     // error code name for rejected entries
};

std::vector<ManifestEntry> load_manifest(const std::string& manifest_path);

struct FileVerdict {
  ManifestEntry entry;
  bool ok = false;          // outcome matched the expectation
  std::string detail;       // mismatch description
  ModuleReport report;
};

struct CorpusResult {
  std::vector<FileVerdict> files;
  bool all_ok = true;
  long long elapsed_ms = 0;
};

// `root` is the directory manifest paths are relative to. Accepted files
// extend a shared environment; expected-rejected files run on a copy.
CorpusResult verify_corpus(const std::vector<ManifestEntry>& manifest, const std::string& root);

std::string read_file(const std::string& path);

}  // namespace tltt

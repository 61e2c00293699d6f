#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "actual_cause/report.hpp"

namespace actual_cause {

struct CorpusEntry {
  std::string id;
  std::filesystem::path model_path;
  std::filesystem::path golden_path;
  std::string source;
  CausalModel model;
  std::string formula_text;
  Matrix phi;
  /// The golden document: expected judgments, their provenance, and the
  /// pinned full reports.
  report::Json golden;
};

/// Reads `dir`/index.json and every listed model and golden file. Any
/// parse, validation or consistency failure throws Error.
[[nodiscard]] std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

/// Full reports for an entry, keyed as in the golden file's "reports".
[[nodiscard]] report::Json golden_reports(const CorpusEntry& entry, const SearchLimits& limits = {});

struct GoldenCheck {
  std::string entry;
  std::string operation;
  bool pass;
  std::string expected;
  std::string actual;
};

/// Recomputes every expectation and report of each entry and compares.
[[nodiscard]] std::vector<GoldenCheck> run_golden(const std::vector<CorpusEntry>& entries,
                                                  const SearchLimits& limits = {});

}  // namespace actual_cause

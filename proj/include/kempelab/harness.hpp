#pragma once

#include <string>
#include <vector>

#include "kempelab/embed.hpp"

namespace kempelab {

// One verification run.  Counts are aggregated per atomic check; vacuous
// counts quantifiers whose range was empty.  Deterministic for a fixed corpus
// and configuration, independent of the job count.
struct SuiteReport {
  std::string suite;
  std::string corpus;
  long checks = 0;
  long passed = 0;
  long failed = 0;
  long vacuous = 0;
  // Observed quantities worth pinning across runs (hit counts and such).
  std::vector<std::pair<std::string, long>> stats;
  std::vector<std::string> counterexamples;  // graph order, capped
  double wall_ms = 0;
  bool ok() const { return failed == 0; }
};

struct SuiteConfig {
  int n_max = 8;
  std::string corpus_file;  // planar_code stream; generator when empty
  int jobs = 1;
  long cap = 1'000'000;  // forwarded to cycle and state space limits
};

std::vector<std::string> suite_names();

// Runs one named suite over the corpus.  UnknownSuite for a name outside
// suite_names, CorpusUnavailable when the corpus file cannot be read.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg);

std::string report_json(const SuiteReport& r);

}  // namespace kempelab

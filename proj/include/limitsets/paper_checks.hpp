#pragma once
// Reproduction checks for the worked examples, run against the data corpus.

#include <string>
#include <vector>

namespace limitsets {

struct CheckResult {
  std::string id;           // example id, e.g. "spikes"
  std::string claim;        // the statement being checked
  std::string expectation;  // "stated" (from the source text) or "derived"
  std::string computed;     // what the library computed
  std::string provenance;   // exact / empirical(...) of the computation
  bool pass = false;
};

/// Ids in report order: spikes, plateau, folded-tent, parabolas, gamma,
/// growing-gaps, shrinking-gaps, realization.
const std::vector<std::string>& paper_check_ids();

/// Directory of the bundled corpus (compile-time default).
std::string default_data_dir();

/// Runs the checks of one example. A corpus file that fails to load yields
/// a single failed result naming the file instead of an exception.
std::vector<CheckResult> run_paper_check(const std::string& id, const std::string& data_dir);

/// All examples in id order, or only `only` when nonempty. Throws
/// Error(parse) for an unknown id.
std::vector<CheckResult> run_paper_checks(const std::string& data_dir, const std::string& only = {});

}  // namespace limitsets

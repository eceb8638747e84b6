#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "basilica/config.hpp"

namespace basilica::acceptance {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<Check> checks;
  nlohmann::ordered_json data;  // deterministic measurements
};

inline constexpr int kCriterionCount = 12;

const std::vector<std::string>& criterion_names();

/// Runs one criterion (1-based). `fast` shrinks levels and sample sizes;
/// the full mode runs at the pinned sizes and tolerances. Module errors are
/// caught and reported as a failed check.
CriterionResult run_criterion(int id, const RunConfig& config, bool fast);
std::vector<CriterionResult> run_all(const RunConfig& config, bool fast);

/// "[PASS] 3 L-presentation relators (0.12 s)" plus indented failed checks.
std::string summary_line(const CriterionResult& r);

/// {"criteria": [...]} with timings left out; see timing_json.
nlohmann::ordered_json report_json(const std::vector<CriterionResult>& results);
nlohmann::ordered_json timing_json(const std::vector<CriterionResult>& results);

}  // namespace basilica::acceptance

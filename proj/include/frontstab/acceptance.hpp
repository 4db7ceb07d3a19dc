#pragma once

#include <functional>
#include <string>
#include <vector>

namespace frontstab {

enum class CriterionStatus { pass, fail, skip };

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::fail;
  std::string measured;  // human-readable measured values
  double seconds = 0.0;
};

struct AcceptanceOptions {
  // Quick mode skips the 2D simulations (criteria 9 and 10).
  bool full = true;
  // Called as each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

/// Runs criteria 1-11 in order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

/// "PASS", "FAIL" or "SKIP".
const char* status_label(CriterionStatus s);

/// One line: "<LABEL> <id> <name>: <measured>".
std::string format_result(const CriterionResult& r);

/// True iff no criterion failed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace frontstab

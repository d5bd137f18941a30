#pragma once

#include "heightzeta_cli/cli.hpp"

#include <string>
#include <vector>

namespace heightzeta::cli {

inline constexpr int kCriterionCount = 9;

struct Check {
  std::string label;
  bool pass = false;
  std::string measured;
};

struct CriterionReport {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double budget_seconds = 0.0;

  bool pass() const;
  /// "criterion N PASS|FAIL title: measured values [time / budget]"
  std::string line() const;
};

/// Runs acceptance criterion `id` (1..9). Library errors are caught and
/// recorded as a failed check.
CriterionReport run_criterion(int id, const RunConfig& cfg);

}  // namespace heightzeta::cli

#pragma once

#include <string>
#include <vector>

namespace sipot::acceptance {

/// One measured quantity compared with its bound. Normally value <= limit passes; for
/// checks that assert a failure (must_exceed) value > limit passes.
struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  bool must_exceed = false;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = 0.0;
  /// Set when the computation threw; the criterion then fails.
  std::string error;

  bool pass() const;
};

/// 1..8
std::vector<int> criterion_ids();

/// Runs one criterion, timing it. Unknown ids throw ArgumentError.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "[PASS] 3 hulthen-logcos-identity (0.01 s): ..." style one-line summary.
std::string summary_line(const CriterionResult& result);

}  // namespace sipot::acceptance

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace k3reg::app {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
};

constexpr int kCriteriaCount = 12;

/// Criteria 1..11. Criterion 12 is an aggregate and is produced by
/// run_acceptance only.
CriterionResult run_criterion(int id, const AcceptanceOptions& opts = {});

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  double seconds = 0.0;
  bool all_passed = false;
};

/// Runs the requested criteria in order. Requesting 12 runs 1..11 as well,
/// since it judges the whole suite (all pass, total time under 15 minutes).
AcceptanceReport run_acceptance(const std::vector<int>& ids, const AcceptanceOptions& opts = {});

std::string format_result_line(const CriterionResult& r);

}  // namespace k3reg::app

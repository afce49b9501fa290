#pragma once

#include <string>
#include <vector>

namespace td {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;  // the checks held and the run finished within the limit
  bool checks_ok = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// The nine end-to-end criteria, numbered 1..9.
std::vector<int> criterion_ids();
CriterionResult run_criterion(int id);

}  // namespace td

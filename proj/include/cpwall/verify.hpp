#pragma once

#include <string>
#include <vector>

namespace cpwall::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  bool open_question = false;  // reported, never silently reconciled
  std::string measured;
  double seconds = 0.0;
};

/// Runs all acceptance checks; `quick` uses reduced grids.
std::vector<CriterionResult> run_acceptance(bool quick);

/// "[PASS] 01 title: measured" (or FAIL / OPEN-PASS).
std::string format_line(const CriterionResult& r);

}  // namespace cpwall::verify

#pragma once

#include <functional>
#include <string>
#include <vector>

namespace weylva::verify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Runs every acceptance criterion; quick mode shrinks the bounds.
std::vector<CriterionResult> run_acceptance(bool quick, const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& r);

}  // namespace weylva::verify

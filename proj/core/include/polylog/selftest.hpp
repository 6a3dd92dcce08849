#pragma once

#include <functional>
#include <string>
#include <vector>

namespace polylog {

enum class SelftestLevel { Fast, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the fifteen acceptance criteria in order. Fast shrinks the random
/// corpora; Full uses the sizes the criteria call for. `report` is invoked
/// after each criterion.
std::vector<CriterionResult> run_acceptance(SelftestLevel level,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// "PASS  3 relation-depth3  (0.41 s)  36, 36, -71, 90, -18"
std::string format_criterion(const CriterionResult& r);

}  // namespace polylog

#include <iostream>

#include "polylog/selftest.hpp"

int main() {
  int failed = 0;
  polylog::run_acceptance(polylog::SelftestLevel::Full, [&](const polylog::CriterionResult& r) {
    std::cout << polylog::format_criterion(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: ")
            << (failed == 0 ? "" : std::to_string(failed)) << std::endl;
  return failed == 0 ? 0 : 1;
}

// One line per acceptance criterion; the exit code is nonzero if any fails.
// Usage: heightzeta_acceptance [N ...]   (all criteria when no N is given)

#include "heightzeta_cli/criteria.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace heightzeta::cli;
  const RunConfig cfg = default_run_config();
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  bool all = true;
  for (int id : ids) {
    const auto report = run_criterion(id, cfg);
    std::cout << report.line() << std::endl;
    all = all && report.pass();
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

// Acceptance suite: one line per criterion, exit status 1 if any fails.
#include <cstdlib>
#include <iostream>

#include "superspace/verify.hpp"

int main(int argc, char** argv) {
  superspace::VerifyOptions options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  int failures = 0;
  for (int i = 1; i <= superspace::kAcceptanceCriteria; ++i) {
    const auto result = superspace::run_criterion(i, options);
    std::cout << superspace::format_result(result) << " [" << result.seconds << "s]" << std::endl;
    if (!result.passed) ++failures;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

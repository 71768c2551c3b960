#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace superspace {

struct CheckResult {
  std::string id;    // "C01".."C12" for acceptance criteria, "I.." otherwise
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failure, empty when passed
  double seconds = 0;
};

struct VerifyOptions {
  std::uint64_t seed = 20240617;
};

constexpr int kAcceptanceCriteria = 12;

// Criterion `index` in 1..12.
CheckResult run_criterion(int index, const VerifyOptions& options = {});
std::vector<CheckResult> run_acceptance(const VerifyOptions& options = {});

// Module property suites beyond the acceptance list.
std::vector<CheckResult> run_invariants(const VerifyOptions& options = {});

// "PASS C01 name (N cases)" or "FAIL C01 name: counterexample".
std::string format_result(const CheckResult& result);

}  // namespace superspace

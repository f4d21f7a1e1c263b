#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace entrobounds {

struct SuiteResult {
  std::string name;
  int trials;
  int violations;
  // Smallest slack seen across every check of the suite. Inequality checks
  // contribute lhs - rhs directly; identity checks contribute minus their
  // residual. Anything at or above the suite tolerance's negative is a pass.
  double worst_slack;
};

// Randomized property suites over seeded scenarios: data-processing
// monotonicity, its classical and quantum coarse-grainings, the transpose
// channel inequality, the full bound ordering chain, the exact identities,
// pure-preservation of single-Kraus instruments, and the dual-measurement
// construction. Deterministic in seed.
std::vector<SuiteResult> run_verify_suites(uint64_t seed, int trials);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace entrobounds

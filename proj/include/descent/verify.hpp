#ifndef DESCENT_VERIFY_HPP
#define DESCENT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace descent {

struct VerifyOptions {
  std::vector<int> dims{2, 3, 4, 5};
  std::uint64_t seed = 1;
  int trials = 200;
};

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;  // filled on failure
};

// Exact identity suites over seeded random forms: exterior operator laws,
// Hodge duality and sign lemmas, wave against Laplace-Beltrami, projector
// algebra, decomposition round trips, Hodge block structure.
std::vector<CheckResult> run_identity_suites(const VerifyOptions& opts);

}  // namespace descent

#endif

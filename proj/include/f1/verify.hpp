#pragma once

#include <string>
#include <vector>

namespace f1 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full invariant suite: counting identities against the brute-force
/// matrix oracle, graded census identities, bijectivity/injectivity of the
/// evaluation maps, the extension-law suite, Bruhat partition, big cell and
/// commutator checks. Exact arithmetic throughout; every check is a hard
/// equality.
std::vector<CheckResult> run_verification(long long budget = 1000000);

}  // namespace f1

#pragma once

#include <string>
#include <vector>

namespace fpl {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The nine-part acceptance battery. Triple sweeps cover every legal
// placement with 3 <= a+b+c <= n_max over both boundary parities; throws
// bound_exceeded if n_max exceeds oracle_bound. Scopes fixed by contract
// regardless of n_max: link-pattern rotation invariance at n <= 4, formula
// agreement for a,b,c <= 8, honeycomb complement structure for abc <= 27.
std::vector<CheckResult> acceptance_battery(int n_max = 6,
                                            int oracle_bound = 6);

}  // namespace fpl

#include <cstdio>

#include "fpl/verify.hpp"

int main() {
  auto results = fpl::acceptance_battery(6, 6);
  bool all = true;
  for (size_t i = 0; i < results.size(); ++i) {
    all = all && results[i].pass;
    std::printf("criterion %zu (%s): %s - %s\n", i + 1,
                results[i].name.c_str(), results[i].pass ? "PASS" : "FAIL",
                results[i].detail.c_str());
  }
  return all ? 0 : 1;
}

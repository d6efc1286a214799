#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fpl/dynamics.hpp"
#include "fpl/json_io.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int nmax = argc > 1 ? std::atoi(argv[1]) : 6;
  std::printf("%-26s %12s %12s %8s %6s\n", "kernel", "serial ms",
              "parallel ms", "speedup", "equal");
  for (int n = 4; n <= nmax; ++n) {
    auto t0 = Clock::now();
    auto serial = fpl::enumerate_all_fpl(n, 0, nmax);
    double ts = ms_since(t0);
    t0 = Clock::now();
    auto par = fpl::enumerate_all_fpl_parallel(n, 0, nmax);
    double tp = ms_since(t0);
    bool equal = serial == par;
    std::string name = "enumerate n=" + std::to_string(n);
    std::printf("%-26s %12.2f %12.2f %8.2f %6s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, equal ? "yes" : "NO");
  }
  {
    // every legal placement at n = nmax, closure BFS
    int n = nmax;
    std::vector<fpl::ActiveRegion> regions;
    for (int p0 = 0; p0 < 4 * n; p0 += 2)
      for (int p1 = p0 + 2; p1 < 4 * n; p1 += 2)
        for (int p2 = p1 + 2; p2 < 4 * n; p2 += 2) {
          try {
            fpl::ArchGeometry geo = fpl::classify(n, p0, p1, p2);
            regions.push_back(fpl::active_region(geo, fpl::fixed_edges(geo)));
          } catch (const fpl::Error&) {
          }
        }
    auto t0 = Clock::now();
    long long total_s = 0;
    for (const auto& r : regions)
      total_s += static_cast<long long>(fpl::flip_closure(r, nmax).size());
    double ts = ms_since(t0);
    t0 = Clock::now();
    long long total_p = 0;
    for (const auto& r : regions)
      total_p +=
          static_cast<long long>(fpl::flip_closure_parallel(r, nmax).size());
    double tp = ms_since(t0);
    std::string name =
        "closures n=" + std::to_string(n) + " (" +
        std::to_string(regions.size()) + " types)";
    std::printf("%-26s %12.2f %12.2f %8.2f %6s\n", name.c_str(), ts, tp,
                tp > 0 ? ts / tp : 0.0, total_s == total_p ? "yes" : "NO");
  }
  return 0;
}

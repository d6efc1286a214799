#include "fpl/dynamics.hpp"

#include <map>
#include <string>

#include "fpl/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fpl {

std::vector<FplGrid> fpl_flip_neighbors(const FplGrid& g,
                                        const ActiveRegion& region) {
  fpl_to_dimers(g, region);  // domain check
  LinkPattern lp = link_pattern(g);
  int loops = internal_loop_count(g);
  std::vector<FplGrid> out;
  for (const Domino& dm : region.dominos) {
    int pattern = 0;
    for (int k = 0; k < 6; ++k)
      if (g.get(dm.border[k]) == EdgeState::Occupied) pattern |= 1 << k;
    if (pattern != 0b010101 && pattern != 0b101010) continue;
    FplGrid h = g;
    for (int e : dm.border)
      h.set(e, g.get(e) == EdgeState::Occupied ? EdgeState::Empty
                                               : EdgeState::Occupied);
    validate_complete(h);
    if (!(link_pattern(h) == lp))
      throw Error(ErrorKind::structure, "flip changed the link pattern");
    if (internal_loop_count(h) != loops)
      throw Error(ErrorKind::structure, "flip changed the loop count");
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<FplGrid> flip_closure(const ActiveRegion& region, int bound) {
  if (region.geo.n > bound)
    throw Error(ErrorKind::bound_exceeded, "grid larger than closure bound");
  std::vector<FplGrid> out;
  std::map<std::string, int> seen;
  out.push_back(base_fpl(region));
  seen[grid_to_json(out[0])] = 0;
  for (size_t head = 0; head < out.size(); ++head) {
    FplGrid cur = out[head];
    for (FplGrid& nb : fpl_flip_neighbors(cur, region)) {
      std::string key = grid_to_json(nb);
      if (seen.emplace(key, static_cast<int>(out.size())).second)
        out.push_back(std::move(nb));
    }
  }
  return out;
}

std::vector<FplGrid> flip_closure(const ArchGeometry& geo, int bound) {
  if (geo.n > bound)
    throw Error(ErrorKind::bound_exceeded, "grid larger than closure bound");
  return flip_closure(active_region(geo, fixed_edges(geo)), bound);
}

std::vector<FplGrid> flip_closure_parallel(const ActiveRegion& region,
                                           int bound) {
  if (region.geo.n > bound)
    throw Error(ErrorKind::bound_exceeded, "grid larger than closure bound");
  std::vector<FplGrid> out;
  std::map<std::string, int> seen;
  out.push_back(base_fpl(region));
  seen[grid_to_json(out[0])] = 0;
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    int fsz = static_cast<int>(frontier.size());
    // Expand the whole frontier in parallel, then merge in frontier order so
    // the discovery order matches the serial BFS.
    std::vector<std::vector<std::pair<std::string, FplGrid>>> parts(fsz);
#pragma omp parallel for schedule(dynamic)
    for (int f = 0; f < fsz; ++f) {
      FplGrid cur = out[frontier[f]];
      for (FplGrid& nb : fpl_flip_neighbors(cur, region))
        parts[f].push_back({grid_to_json(nb), std::move(nb)});
    }
    std::vector<int> next;
    for (int f = 0; f < fsz; ++f)
      for (auto& [key, nb] : parts[f])
        if (seen.emplace(key, static_cast<int>(out.size())).second) {
          next.push_back(static_cast<int>(out.size()));
          out.push_back(std::move(nb));
        }
    frontier = std::move(next);
  }
  return out;
}

FplGrid wieland_gyration(const FplGrid& g) {
  validate_complete(g);
  int n = g.n();
  FplGrid h = g;
  for (int cls = 0; cls < 2; ++cls) {
    FplGrid snap = h;
    for (int cy = 0; cy + 1 < n; ++cy)
      for (int cx = 0; cx + 1 < n; ++cx) {
        if ((cx + cy) % 2 != cls) continue;
        int hs[2] = {snap.hid(cx, cy), snap.hid(cx, cy + 1)};
        int vs[2] = {snap.vid(cx, cy), snap.vid(cx + 1, cy)};
        auto occ = [&](int e) { return snap.get(e) == EdgeState::Occupied; };
        int total = occ(hs[0]) + occ(hs[1]) + occ(vs[0]) + occ(vs[1]);
        bool parallel_pair =
            total == 2 && ((occ(hs[0]) && occ(hs[1])) ||
                           (occ(vs[0]) && occ(vs[1])));
        if (!parallel_pair) continue;
        for (int e : {hs[0], hs[1], vs[0], vs[1]})
          h.set(e, occ(e) ? EdgeState::Empty : EdgeState::Occupied);
      }
  }
  validate_complete(h);
  return h;
}

}  // namespace fpl

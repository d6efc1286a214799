#pragma once

#include <string>

#include "fpl/grid.hpp"
#include "fpl/partitions.hpp"

namespace fpl {

// {"n": N, "occupied": [["H",x,y], ..., ["V",x,y], ..., ["X",p,0], ...]}
// with the edge list sorted; the grid must be complete. The string doubles
// as the canonical dedup key.
std::string grid_to_json(const FplGrid& g);
FplGrid grid_from_json(const std::string& text);  // throws parse

// {"a": A, "b": B, "c": C, "rows": [[...], ...]}
std::string pp_to_json(const PlanePartition& pp);
PlanePartition pp_from_json(const std::string& text);  // throws parse

}  // namespace fpl

#pragma once

#include "fpl/bijection.hpp"

namespace fpl {

// All configurations one box-flip away: a domino whose six border edges
// alternate occupied/empty flips to the opposite alternation. Deterministic
// order (the region's domino order).
std::vector<FplGrid> fpl_flip_neighbors(const FplGrid& g,
                                        const ActiveRegion& region);

// Breadth-first closure of the flip move from base_fpl. Deterministic
// discovery order. Throws bound_exceeded if region.geo.n > bound.
std::vector<FplGrid> flip_closure(const ActiveRegion& region, int bound = 6);
std::vector<FplGrid> flip_closure(const ArchGeometry& geo, int bound = 6);

// OpenMP frontier expansion; identical output order to flip_closure.
std::vector<FplGrid> flip_closure_parallel(const ActiveRegion& region,
                                           int bound = 6);

// One gyration step: plaquettes whose occupied edges form exactly one
// parallel pair swap all four edges; even checkerboard class first (cell
// (0,0) is even), then odd. Rotates the link pattern by one position.
FplGrid wieland_gyration(const FplGrid& g);

}  // namespace fpl

#pragma once

#include "fpl/geometry.hpp"
#include "fpl/honeycomb.hpp"
#include "fpl/partitions.hpp"

namespace fpl {

// Occupied undetermined edges of a complete type-(A,B,C) configuration, read
// through the region's edge dictionary. Throws not_a_matching if g disagrees
// with the fixed map or its link pattern is not the region's type.
DimerConfig fpl_to_dimers(const FplGrid& g, const ActiveRegion& region);

inline PlanePartition dimers_to_pp(const DimerConfig& d) {
  return tiling_to_pp(d);
}

PlanePartition fpl_to_pp(const FplGrid& g, const ActiveRegion& region);

// Inverse: overlay the tiling of pp on the fixed map. Throws incompatible_box
// if the box does not match the region's sizes.
FplGrid pp_to_fpl(const PlanePartition& pp, const ActiveRegion& region);
FplGrid pp_to_fpl(const PlanePartition& pp, const ArchGeometry& geo);

// Image of the empty box: the unique type-(A,B,C) configuration with all
// dominos in their base orientation; has no internal loops.
FplGrid base_fpl(const ActiveRegion& region);
FplGrid base_fpl(const ArchGeometry& geo);

}  // namespace fpl

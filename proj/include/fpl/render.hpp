#pragma once

#include <string>

#include "fpl/geometry.hpp"
#include "fpl/honeycomb.hpp"
#include "fpl/partitions.hpp"

namespace fpl {

// Deterministic text/SVG pictures. SVG output uses integer coordinates only
// and is byte-stable for identical inputs.

// Square grid with stubs; '?' marks undetermined edges, so the same picture
// serves complete configurations and fixed-edge maps.
std::string render_grid_ascii(const FplGrid& g);
std::string render_grid_svg(const FplGrid& g);

// Fixed map plus the domino decomposition of the active region.
std::string render_dominos_ascii(const ActiveRegion& region);
std::string render_dominos_svg(const ActiveRegion& region);

// Lozenge tiling of the (a,b,c) hexagon.
std::string render_hexagon_ascii(const DimerConfig& d);
std::string render_hexagon_svg(const DimerConfig& d);

// Height matrix.
std::string render_pp_ascii(const PlanePartition& pp);
std::string render_pp_svg(const PlanePartition& pp);

// Complementary paths and loops of a matching.
std::string render_hfpl_ascii(const HfplConfig& h);
std::string render_hfpl_svg(const HfplConfig& h);

}  // namespace fpl

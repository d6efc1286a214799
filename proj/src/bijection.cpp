#include "fpl/bijection.hpp"

#include <algorithm>

namespace fpl {

namespace {

// Does the complete grid realize exactly the pairing of the region's type?
bool pairing_matches(const FplGrid& g, const ArchGeometry& geo) {
  LinkPattern lp = link_pattern(g);
  BoundaryPairing want = type_pairing(geo);
  for (int i = 0; i < 2 * g.n(); ++i) {
    int p = lp.position_of(i);
    int q = lp.position_of(lp.pair[i]);
    if (want[p] != q) return false;
  }
  return true;
}

}  // namespace

DimerConfig fpl_to_dimers(const FplGrid& g, const ActiveRegion& region) {
  validate_complete(g);
  if (g.n() != region.geo.n)
    throw Error(ErrorKind::not_a_matching, "grid size differs from region");
  for (int e = 0; e < g.edge_count(); ++e) {
    EdgeState f = region.fixed.get(e);
    if (f != EdgeState::Undetermined && f != g.get(e))
      throw Error(ErrorKind::not_a_matching,
                  "configuration disagrees with the fixed map");
  }
  if (!pairing_matches(g, region.geo))
    throw Error(ErrorKind::not_a_matching,
                "link pattern is not the region's type");
  DimerConfig d;
  d.a = region.geo.a;
  d.b = region.geo.b;
  d.c = region.geo.c;
  for (int he = 0; he < static_cast<int>(region.hex.edges.size()); ++he)
    if (g.get(region.hex_to_sq[he]) == EdgeState::Occupied)
      d.edges.push_back(he);
  return d;
}

PlanePartition fpl_to_pp(const FplGrid& g, const ActiveRegion& region) {
  return tiling_to_pp(fpl_to_dimers(g, region));
}

FplGrid pp_to_fpl(const PlanePartition& pp, const ActiveRegion& region) {
  pp.validate();
  if (pp.a != region.geo.a || pp.b != region.geo.b || pp.c != region.geo.c)
    throw Error(ErrorKind::incompatible_box,
                "partition box differs from the region's type sizes");
  DimerConfig d = pp_to_tiling(pp);
  FplGrid g = region.fixed;
  std::vector<char> in(region.hex.edges.size(), 0);
  for (int he : d.edges) in[he] = 1;
  for (int he = 0; he < static_cast<int>(region.hex.edges.size()); ++he)
    g.set(region.hex_to_sq[he], in[he] ? EdgeState::Occupied : EdgeState::Empty);
  validate_complete(g);
  if (!pairing_matches(g, region.geo))
    throw Error(ErrorKind::structure, "overlay broke the link pattern");
  return g;
}

FplGrid pp_to_fpl(const PlanePartition& pp, const ArchGeometry& geo) {
  return pp_to_fpl(pp, active_region(geo, fixed_edges(geo)));
}

FplGrid base_fpl(const ActiveRegion& region) {
  FplGrid g = pp_to_fpl(
      PlanePartition::filled(region.geo.a, region.geo.b, region.geo.c, 0),
      region);
  if (internal_loop_count(g) != 0)
    throw Error(ErrorKind::structure, "base configuration has a loop");
  return g;
}

FplGrid base_fpl(const ArchGeometry& geo) {
  return base_fpl(active_region(geo, fixed_edges(geo)));
}

}  // namespace fpl

#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "fpl/partitions.hpp"
#include "fpl/types.hpp"

namespace fpl {

// Triangle in the triangular lattice, axial coordinates.
// Up triangle U(i,j) has corners (i,j),(i+1,j),(i,j+1);
// down triangle D(i,j) has corners (i+1,j),(i,j+1),(i+1,j+1).
struct TriRef {
  int i = 0, j = 0;
  bool up = true;
  friend bool operator==(const TriRef&, const TriRef&) = default;
  friend auto operator<=>(const TriRef&, const TriRef&) = default;
};

// Triangulated hexagon with side lengths a,b,c (the dual of the honeycomb
// with ab+bc+ca hexagonal cells is kept implicit: lozenges = matched
// triangle pairs, honeycomb edges = shared triangle sides).
struct HoneycombRegion {
  int a = 0, b = 0, c = 0;
  std::vector<TriRef> tris;                   // sorted
  std::vector<std::pair<int, int>> edges;     // internal: {tri,tri}, tri<tri, sorted
  std::vector<std::pair<int, TriRef>> stubs;  // boundary sides: (tri index, ghost
                                              // neighbor), ccw from corner (a,0)

  int tri_index(const TriRef& t) const;            // -1 if absent
  int edge_index(int t0, int t1) const;            // -1 if absent
  std::array<TriRef, 3> neighbors(int t) const;    // ccw candidate neighbors
  bool contains_point(int i, int j) const;         // lattice point in closed hexagon
  std::vector<std::pair<int, int>> faces() const;  // interior lattice points, sorted

 private:
  std::map<TriRef, int> tri_id_;
  std::map<std::pair<int, int>, int> edge_id_;
  friend HoneycombRegion honeycomb_region(int a, int b, int c);
};

HoneycombRegion honeycomb_region(int a, int b, int c);

// Perfect matching on the region's triangles (lozenge tiling).
struct DimerConfig {
  int a = 0, b = 0, c = 0;
  std::vector<int> edges;  // matched edge indices, sorted
  friend bool operator==(const DimerConfig&, const DimerConfig&) = default;
};

DimerConfig pp_to_tiling(const PlanePartition& pp);

// Inverse; throws not_a_matching if d is not a lozenge tiling of the hexagon.
PlanePartition tiling_to_pp(const DimerConfig& d);

// Complement of a matching: every triangle keeps its two unmatched sides, and
// boundary sides count as stubs, giving 2(a+b+c) path endpoints.
struct HfplConfig {
  int a = 0, b = 0, c = 0;
  std::vector<int> comp_edges;           // internal edges not in the matching
  std::vector<int> stub_pair;            // involution on stub indices
  std::vector<std::vector<int>> paths;   // tri-index runs, one per stub pair
  std::vector<std::vector<int>> loops;   // closed tri-index runs
  friend bool operator==(const HfplConfig&, const HfplConfig&) = default;
};

HfplConfig hfpl_complement(const DimerConfig& d);

}  // namespace fpl

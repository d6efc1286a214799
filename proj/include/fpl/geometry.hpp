#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fpl/grid.hpp"
#include "fpl/honeycomb.hpp"
#include "fpl/types.hpp"

namespace fpl {

// Lattice point with DOUBLED coordinates: (x,y) on the vertex grid is stored
// as (2x,2y) so midpoints of diagonal segments stay integral.
struct P2 {
  int x = 0, y = 0;
  friend bool operator==(const P2&, const P2&) = default;
  friend auto operator<=>(const P2&, const P2&) = default;
  P2 operator+(P2 o) const { return {x + o.x, y + o.y}; }
  P2 operator-(P2 o) const { return {x - o.x, y - o.y}; }
};

// Which side of a simple polygon a point falls on.
enum class Region { outside = -1, boundary = 0, inside = 1 };

// Exact point-vs-polygon test (winding over doubled integer coordinates).
Region region_side(const std::vector<P2>& poly, P2 pt);

// Geometry attached to a legal triple of unoccupied boundary positions.
// Points and polygons live in the normalized frame: norm maps original grid
// coordinates there, C's stub sits on the bottom side.
struct ArchGeometry {
  int n = 0;
  int parity = 0;
  int A = 0, B = 0, C = 0;  // perimeter positions, original frame
  int a = 0, b = 0, c = 0;  // bundle sizes: a around A, b around B, c around C
  int case_tag = 1;         // 1: A,B on top; 2: B on right; 3: A on left
  Transform norm;           // original -> normalized
  int nA = 0, nB = 0, nC = 0;  // normalized perimeter positions
  // Doubled points, normalized frame: stub vertices, their side mirrors
  // (single prime), diagonal mirrors (double prime), and the far rectangle
  // corner D of C,B',A''.
  P2 pA, pB, pC, pA1, pA2, pB1, pB2, pC1, pC2, pD;
  std::vector<P2> poly_p;   // path region P  (through C', C, C'')
  std::vector<P2> poly_pp;  // path region P' (through C', B', D, A'', C'')
};

// Classify an unordered triple of unoccupied perimeter positions.
// Throws invalid_triple if the spacing does not give three sizes >= 1.
ArchGeometry classify(int n, int p0, int p1, int p2);

// partner position for each occupied perimeter position, -1 at A,B,C.
using BoundaryPairing = std::vector<int>;
BoundaryPairing type_pairing(const ArchGeometry& geo);

// One propagation round: degree closure at every vertex, audit of maximal
// occupied fragments against the required pairing, and per-vertex case
// analysis that fixes any edge forced across all legal local completions.
// Returns false when nothing changed. Throws contradiction if the partial
// state cannot extend to a configuration with this pairing.
bool degier_step(FplGrid& g, const BoundaryPairing& pairing);

// Everything forced by the type alone: boundary + stair seeds, degier_step
// to fixpoint, then singleton probing (assume a value, propagate, keep the
// opposite on contradiction) to fixpoint.
FplGrid fixed_edges(const ArchGeometry& geo);

// Two unit cells glued along a forced-occupied middle edge; the six border
// edges are undetermined and match a honeycomb cell.
struct Domino {
  int cx0 = 0, cy0 = 0, cx1 = 0, cy1 = 0;  // lower-left corners of the cells
  int middle = 0;                          // forced edge id between them
  std::vector<int> border;                 // six undetermined edge ids
  std::pair<int, int> face;                // honeycomb face lattice point
};

// Undetermined part of the fixed-edge map, recognized as a deformed
// honeycomb: dominos in bijection with hexagon faces and a bidirectional
// edge dictionary between undetermined square edges and honeycomb edges.
struct ActiveRegion {
  ArchGeometry geo;
  FplGrid fixed{1};  // the fixed-edge map this region was cut from
  HoneycombRegion hex;
  std::vector<Domino> dominos;
  std::vector<std::pair<int, int>> verts;  // active vertices (x,y), one per tri
  std::vector<int> vert_tri;               // vertex index -> tri index
  std::vector<int> hex_to_sq;              // hex edge index -> square edge id
  std::map<int, int> sq_to_hex;            // square edge id -> hex edge index

  int domino_at_face(int i, int j) const;  // -1 if absent
};

ActiveRegion active_region(const ArchGeometry& geo, const FplGrid& fixed);

}  // namespace fpl

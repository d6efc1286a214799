#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fpl/types.hpp"

namespace fpl {

enum class EdgeState : std::uint8_t { Empty = 0, Occupied = 1, Undetermined = 2 };

// Edge naming on the n x n vertex grid, row 0 at the bottom:
//   H(x,y) joins (x,y)-(x+1,y), 0 <= x < n-1, 0 <= y < n
//   V(x,y) joins (x,y)-(x,y+1), 0 <= x < n, 0 <= y < n-1
//   X(p)   external stub at perimeter position p, 0 <= p < 4n, counterclockwise:
//          bottom p in [0,n) at (p,0); right [n,2n) at (n-1,p-n);
//          top [2n,3n) at (3n-1-p,n-1); left [3n,4n) at (0,4n-1-p).
struct EdgeRef {
  char kind;  // 'H', 'V' or 'X'
  int i;      // H/V: x; X: perimeter position p
  int j;      // H/V: y; X: 0
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  auto operator<=>(const EdgeRef&) const = default;
};

// Vertex slot directions.
inline constexpr int kRight = 0, kUp = 1, kLeft = 2, kDown = 3;
inline constexpr int kDx[4] = {1, 0, -1, 0};
inline constexpr int kDy[4] = {0, 1, 0, -1};

class FplGrid {
 public:
  explicit FplGrid(int n);

  int n() const { return n_; }
  int edge_count() const { return 2 * n_ * n_ + 2 * n_; }
  int internal_edge_count() const { return 2 * n_ * (n_ - 1); }

  int hid(int x, int y) const { return y * (n_ - 1) + x; }
  int vid(int x, int y) const { return n_ * (n_ - 1) + y * n_ + x; }
  int xid(int p) const { return 2 * n_ * (n_ - 1) + p; }
  bool is_stub(int id) const { return id >= 2 * n_ * (n_ - 1); }

  EdgeState get(int id) const { return st_[id]; }
  void set(int id, EdgeState s) { st_[id] = s; }

  EdgeRef ref(int id) const;
  int id(const EdgeRef& r) const;

  // The edge (internal or stub) at vertex (x,y) in direction dir; always exists.
  int incident(int x, int y, int dir) const;

  // Perimeter position p -> (vertex x, vertex y, outward direction).
  void stub_vertex(int p, int& x, int& y, int& dir) const;

  int occupied_degree(int x, int y) const;
  int undetermined_degree(int x, int y) const;

  bool complete() const;  // no Undetermined edge anywhere

  friend bool operator==(const FplGrid&, const FplGrid&) = default;

 private:
  int n_;
  std::vector<EdgeState> st_;
};

// Grid with external edges fixed by alternation (parity selects the occupied
// class: position p occupied iff p % 2 == parity) and all internal edges
// Undetermined.
FplGrid boundary(int n, int parity);

// Parity of a completed-boundary grid (0 or 1); throws invalid_grid if the
// stubs are not a full alternation class.
int boundary_parity(const FplGrid& g);

// Throws invalid_grid unless g is complete, every vertex has occupied degree
// exactly 2, and the boundary is a full alternation class.
void validate_complete(const FplGrid& g);

struct LinkPattern {
  int n = 0;
  int parity = 0;
  std::vector<int> pair;  // involution on occupied-stub indices 0..2n-1, ccw

  int position_of(int index) const { return (2 * index + parity) % (4 * n); }
  int index_of(int position) const;
  friend bool operator==(const LinkPattern&, const LinkPattern&) = default;
};

LinkPattern link_pattern(const FplGrid& g);
bool non_crossing(const LinkPattern& p);
LinkPattern rotate_pattern(const LinkPattern& p, int d);

int internal_loop_count(const FplGrid& g);

struct TypeABC {
  int A, B, C;  // perimeter positions of the three bundle centers
  int a, b, c;  // bundle sizes, labeled as in classify()
  friend bool operator==(const TypeABC&, const TypeABC&) = default;
};

// Bundle detection on an abstract involution of 0..2m-1 (ccw): returns the
// list of (center gap index, size) iff the pairing is exactly three disjoint
// nested bundles covering everything; centers sorted by gap index.
std::optional<std::vector<std::pair<int, int>>> detect_bundles(
    const std::vector<int>& pairing);

std::optional<TypeABC> is_type_abc(const LinkPattern& p);

// Exhaustive enumeration of all completions of boundary(n,parity); vertex
// sweep order, deterministic. Throws bound_exceeded if n > bound.
std::vector<FplGrid> enumerate_all_fpl(int n, int parity = 0, int bound = 6);

// OpenMP variant; output order identical to enumerate_all_fpl.
std::vector<FplGrid> enumerate_all_fpl_parallel(int n, int parity = 0,
                                                int bound = 6);

// Independent reference oracle (edge-by-edge variable order, different code
// path); same set, order may differ.
std::vector<FplGrid> enumerate_all_fpl_ref(int n, int parity = 0,
                                           int bound = 6);

// Dihedral symmetry of the square acting on the vertex grid:
// (x,y) -> swap? (y,x) : (x,y), then x -> n-1-x if negx, y -> n-1-y if negy.
struct Transform {
  bool swap = false, negx = false, negy = false;
  friend bool operator==(const Transform&, const Transform&) = default;
};

inline constexpr Transform kIdentity{};

std::pair<int, int> apply_vertex(const Transform& t, int n, int x, int y);
int apply_dir(const Transform& t, int dir);
Transform compose(const Transform& after, const Transform& before);
Transform inverse(const Transform& t);
const std::vector<Transform>& all_transforms();

int transform_position(const Transform& t, int n, int p);
int transform_edge(const Transform& t, const FplGrid& g, int id);
FplGrid transform_grid(const Transform& t, const FplGrid& g);

}  // namespace fpl

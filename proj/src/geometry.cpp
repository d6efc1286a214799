#include "fpl/geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <cstring>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <tuple>

namespace fpl {

Region region_side(const std::vector<P2>& poly, P2 pt) {
  int m = static_cast<int>(poly.size());
  long long wn = 0;
  for (int k = 0; k < m; ++k) {
    P2 v1 = poly[k], v2 = poly[(k + 1) % m];
    if (v1 == v2) continue;  // coinciding construction points are permitted
    long long cross = static_cast<long long>(v2.x - v1.x) * (pt.y - v1.y) -
                      static_cast<long long>(v2.y - v1.y) * (pt.x - v1.x);
    if (cross == 0 && std::min(v1.x, v2.x) <= pt.x &&
        pt.x <= std::max(v1.x, v2.x) && std::min(v1.y, v2.y) <= pt.y &&
        pt.y <= std::max(v1.y, v2.y))
      return Region::boundary;
    if (v1.y <= pt.y && pt.y < v2.y && cross > 0) ++wn;
    if (v2.y <= pt.y && pt.y < v1.y && cross < 0) --wn;
  }
  return wn != 0 ? Region::inside : Region::outside;
}

namespace {

struct StubInfo {
  int x, y, dir, side;
};

StubInfo stub_info(const FplGrid& g, int p) {
  StubInfo s;
  g.stub_vertex(p, s.x, s.y, s.dir);
  s.side = p / g.n();
  return s;
}

// Closed-cone test: does the cone opening from center position pc into the
// square contain the stub vertex of position po?
bool in_cone(const FplGrid& g, int pc, int po) {
  int n = g.n();
  StubInfo c = stub_info(g, pc), o = stub_info(g, po);
  switch (c.side) {
    case 0: return std::abs(o.x - c.x) <= o.y;
    case 1: return std::abs(o.y - c.y) <= n - 1 - o.x;
    case 2: return std::abs(o.x - c.x) <= n - 1 - o.y;
    default: return std::abs(o.y - c.y) <= o.x;
  }
}

}  // namespace

ArchGeometry classify(int n, int p0, int p1, int p2) {
  if (n < 3) throw Error(ErrorKind::invalid_triple, "grid too small");
  std::array<int, 3> ps{p0, p1, p2};
  for (int p : ps)
    if (p < 0 || p >= 4 * n)
      throw Error(ErrorKind::invalid_triple, "position out of range");
  if (ps[0] == ps[1] || ps[0] == ps[2] || ps[1] == ps[2])
    throw Error(ErrorKind::invalid_triple, "positions not distinct");
  if ((ps[0] & 1) != (ps[1] & 1) || (ps[0] & 1) != (ps[2] & 1))
    throw Error(ErrorKind::invalid_triple, "positions of mixed parity");

  FplGrid probe(n);
  int center = -1;
  for (int i = 0; i < 3; ++i) {
    bool both = in_cone(probe, ps[i], ps[(i + 1) % 3]) &&
                in_cone(probe, ps[i], ps[(i + 2) % 3]);
    if (both) {
      if (center >= 0)
        throw Error(ErrorKind::invalid_triple, "cone center not unique");
      center = i;
    }
  }
  if (center < 0)
    throw Error(ErrorKind::invalid_triple, "no cone center");
  int pC = ps[center];
  int q1 = ps[(center + 1) % 3], q2 = ps[(center + 2) % 3];
  {
    StubInfo c = stub_info(probe, pC);
    bool cx = c.x == 0 || c.x == n - 1, cy = c.y == 0 || c.y == n - 1;
    // A corner apex would force one bundle past the opposite side (size <= 0),
    // so no valid type puts its enclosing center there.
    if (cx && cy)
      throw Error(ErrorKind::invalid_triple, "cone center in a corner");
  }

  // The two dihedral images placing C's stub on the bottom side.
  struct Cand {
    Transform t;
    int nC, nB, nA;
    bool b_right;
    int idx;
  };
  std::vector<Cand> cands;
  {
    auto ts = all_transforms();
    for (size_t i = 0; i < ts.size(); ++i) {
      int nC = transform_position(ts[i], n, pC);
      if (nC / n != 0) continue;
      int m1 = transform_position(ts[i], n, q1);
      int m2 = transform_position(ts[i], n, q2);
      int d1 = ((m1 - nC) % (4 * n) + 4 * n) % (4 * n);
      int d2 = ((m2 - nC) % (4 * n) + 4 * n) % (4 * n);
      Cand cd;
      cd.t = ts[i];
      cd.nC = nC;
      cd.nB = d1 < d2 ? m1 : m2;
      cd.nA = d1 < d2 ? m2 : m1;
      cd.b_right = cd.nB / n == 1;
      cd.idx = static_cast<int>(i);
      cands.push_back(cd);
    }
  }
  if (cands.size() != 2)
    throw Error(ErrorKind::structure, "normalization candidates != 2");
  std::sort(cands.begin(), cands.end(), [](const Cand& l, const Cand& r) {
    return std::tuple(!l.b_right, l.nC, l.nB, l.nA, l.idx) <
           std::tuple(!r.b_right, r.nC, r.nB, r.nA, r.idx);
  });
  const Cand& sel = cands.front();

  ArchGeometry geo;
  geo.n = n;
  geo.parity = 1 - (pC & 1);
  geo.norm = sel.t;
  geo.nC = sel.nC;
  geo.nB = sel.nB;
  geo.nA = sel.nA;
  Transform inv = inverse(sel.t);
  geo.C = transform_position(inv, n, sel.nC);
  geo.B = transform_position(inv, n, sel.nB);
  geo.A = transform_position(inv, n, sel.nA);
  if (geo.C != pC) throw Error(ErrorKind::structure, "normalization broken");

  // Sizes from the counterclockwise occupied-gap identities.
  int n4 = 4 * n;
  int g0 = (((geo.nB - geo.nC) % n4 + n4) % n4) / 2;  // b+c
  int g1 = (((geo.nA - geo.nB) % n4 + n4) % n4) / 2;  // a+b
  int g2 = (((geo.nC - geo.nA) % n4 + n4) % n4) / 2;  // c+a
  geo.a = n - g0;
  geo.b = n - g2;
  geo.c = n - g1;
  if (geo.a < 1 || geo.b < 1 || geo.c < 1)
    throw Error(ErrorKind::invalid_triple, "bundle sizes must be >= 1");

  int sideB = geo.nB / n, sideA = geo.nA / n;
  int gam = geo.nC;
  geo.pC = {2 * gam, 0};
  geo.pC1 = {0, 2 * gam};
  geo.pC2 = {2 * (n - 1), 2 * (n - 1 - gam)};
  int ca = 0, cb = 0, cc = 0;  // per-case size cross-check
  if (sideB == 2 && sideA == 2) {
    geo.case_tag = 1;
    int beta = 3 * n - 1 - geo.nB, alpha = 3 * n - 1 - geo.nA;
    geo.pA = {2 * alpha, 2 * (n - 1)};
    geo.pB = {2 * beta, 2 * (n - 1)};
    geo.pA1 = {0, 2 * (n - 1 - alpha)};
    geo.pA2 = {alpha + gam + n - 1, n - 1 + alpha - gam};
    geo.pB1 = {beta + gam - n + 1, n - 1 - beta + gam};
    geo.pB2 = {2 * (n - 1), 2 * beta};
    geo.pD = {alpha + beta, 2 * (n - 1) - (beta - alpha)};
    ca = (beta + gam - n + 1) / 2;
    cb = (n - 1 - alpha - gam) / 2;
    cc = (2 * n + alpha - beta) / 2;
    geo.poly_pp = {geo.pA,  geo.pA1, geo.pC1, geo.pB1, geo.pD,
                   geo.pA2, geo.pC2, geo.pB2, geo.pB};
    geo.poly_p = {geo.pA, geo.pA1, geo.pC1, geo.pC, geo.pC2, geo.pB2, geo.pB};
  } else if (sideB == 1 && sideA == 2) {
    geo.case_tag = 2;
    int beta = geo.nB - n, alpha = 3 * n - 1 - geo.nA;
    geo.pA = {2 * alpha, 2 * (n - 1)};
    geo.pB = {2 * (n - 1), 2 * beta};
    geo.pA1 = {0, 2 * (n - 1 - alpha)};
    geo.pA2 = {alpha + gam + n - 1, n - 1 + alpha - gam};
    geo.pB1 = {n - 1 + gam - beta, beta - n + 1 + gam};
    geo.pB2 = {2 * beta, 2 * (n - 1)};
    geo.pD = {alpha + 2 * n - 2 - beta, alpha + beta};
    ca = (n + gam - beta) / 2;
    cb = (n - 1 - alpha - gam) / 2;
    cc = (alpha + beta + 1) / 2;
    geo.poly_pp = {geo.pA,  geo.pA1, geo.pC1, geo.pB1, geo.pD,
                   geo.pA2, geo.pC2, geo.pB,  geo.pB2};
    geo.poly_p = {geo.pA, geo.pA1, geo.pC1, geo.pC, geo.pC2, geo.pB, geo.pB2};
  } else if (sideB == 1 && sideA == 3) {
    geo.case_tag = 3;
    int beta = geo.nB - n, alpha = 4 * n - 1 - geo.nA;
    geo.pA = {0, 2 * alpha};
    geo.pB = {2 * (n - 1), 2 * beta};
    geo.pA1 = {2 * (n - 1 - alpha), 2 * (n - 1)};
    geo.pA2 = {alpha + gam, alpha - gam};
    geo.pB1 = {n - 1 + gam - beta, beta - n + 1 + gam};
    geo.pB2 = {2 * beta, 2 * (n - 1)};
    geo.pD = {alpha + n - 1 - beta, alpha - n + 1 + beta};
    ca = (n + gam - beta) / 2;
    cb = (2 * n - 1 - alpha - gam) / 2;
    cc = (alpha + beta + 1 - n) / 2;
    geo.poly_pp = {geo.pA1, geo.pA,  geo.pC1, geo.pB1, geo.pD,
                   geo.pA2, geo.pC2, geo.pB,  geo.pB2};
    geo.poly_p = {geo.pA1, geo.pA, geo.pC1, geo.pC, geo.pC2, geo.pB, geo.pB2};
  } else {
    throw Error(ErrorKind::structure, "unrecognized normalized layout");
  }
  if (ca != geo.a || cb != geo.b || cc != geo.c)
    throw Error(ErrorKind::structure, "case size formulas disagree");
  if (!(geo.pD == geo.pB1 + geo.pA2 - geo.pC))
    throw Error(ErrorKind::structure, "rectangle corner off");
  return geo;
}

BoundaryPairing type_pairing(const ArchGeometry& geo) {
  int n4 = 4 * geo.n;
  BoundaryPairing pr(n4, -1);
  auto bundle = [&](int centre, int size) {
    for (int k = 1; k <= size; ++k) {
      int p = ((centre - (2 * k - 1)) % n4 + n4) % n4;
      int q = (centre + (2 * k - 1)) % n4;
      if (pr[p] != -1 || pr[q] != -1)
        throw Error(ErrorKind::structure, "bundles overlap");
      pr[p] = q;
      pr[q] = p;
    }
  };
  bundle(geo.A, geo.a);
  bundle(geo.B, geo.b);
  bundle(geo.C, geo.c);
  for (int p = 0; p < n4; ++p) {
    bool occupied_class = (p % 2) == geo.parity;
    if (occupied_class != (pr[p] >= 0))
      throw Error(ErrorKind::structure, "pairing does not cover boundary");
  }
  return pr;
}

// ---------------------------------------------------------------------------
// Staircase seeding
// ---------------------------------------------------------------------------

namespace {

struct Territory {
  int kx, ky;            // corner
  int e1x, e1y, e2x, e2y;  // unit legs: e1 toward apex, e2 the other
  int m;                 // apex distance
};

// The two corner territories carved by the diagonals of the stub at p.
std::array<Territory, 2> territories_of(const FplGrid& g, int p) {
  int n = g.n();
  StubInfo s = stub_info(g, p);
  switch (s.side) {
    case 0:
      return {Territory{0, 0, 1, 0, 0, 1, s.x},
              Territory{n - 1, 0, -1, 0, 0, 1, n - 1 - s.x}};
    case 1:
      return {Territory{n - 1, 0, 0, 1, -1, 0, s.y},
              Territory{n - 1, n - 1, 0, -1, -1, 0, n - 1 - s.y}};
    case 2:
      return {Territory{n - 1, n - 1, -1, 0, 0, -1, n - 1 - s.x},
              Territory{0, n - 1, 1, 0, 0, -1, s.x}};
    default:
      return {Territory{0, n - 1, 0, -1, 1, 0, n - 1 - s.y},
              Territory{0, 0, 0, 1, 1, 0, s.y}};
  }
}

bool territory_contains(const Territory& t, int x, int y) {
  int u = (x - t.kx) * t.e1x + (y - t.ky) * t.e1y;
  int w = (x - t.kx) * t.e2x + (y - t.ky) * t.e2y;
  return u >= 0 && w >= 0 && u + w <= t.m;
}

void stamp(FplGrid& g, const Territory& t, int u0, int w0, int u1, int w1,
           EdgeState v) {
  int x0 = t.kx + u0 * t.e1x + w0 * t.e2x, y0 = t.ky + u0 * t.e1y + w0 * t.e2y;
  int x1 = t.kx + u1 * t.e1x + w1 * t.e2x, y1 = t.ky + u1 * t.e1y + w1 * t.e2y;
  int id;
  if (y0 == y1)
    id = g.hid(std::min(x0, x1), y0);
  else
    id = g.vid(x0, std::min(y0, y1));
  EdgeState cur = g.get(id);
  if (cur != EdgeState::Undetermined && cur != v)
    throw Error(ErrorKind::structure, "stair seed conflict");
  g.set(id, v);
}

void seed_one_stair(FplGrid& g, const Territory& t) {
  int m = t.m;
  // Occupied staircase paths hook the boundary stubs of the two legs
  // around the corner; everything else inside the triangle is empty.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> occ;
  auto mark = [&](int u0, int w0, int u1, int w1) {
    occ.insert({{u0, w0}, {u1, w1}});
  };
  for (int tt = 0; tt < m; ++tt) {
    if (2 * tt < m) {
      int s0 = m - 1 - 2 * tt;
      mark(s0, 0, s0 + 1, 0);
      for (int s = 0; s < tt; ++s) {
        mark(m - 2 * tt + s, s, m - 2 * tt + s, s + 1);
        mark(m - 2 * tt + s, s + 1, m - 2 * tt + s + 1, s + 1);
      }
    } else {
      int w0 = 2 * tt - m;
      for (int s = 0; s < m - tt; ++s) {
        mark(s, w0 + s, s, w0 + s + 1);
        mark(s, w0 + s + 1, s + 1, w0 + s + 1);
      }
    }
  }
  for (int u = 0; u <= m; ++u)
    for (int w = 0; u + w <= m; ++w) {
      if (u + 1 + w <= m) {
        bool is_occ = occ.count({{u, w}, {u + 1, w}}) > 0;
        stamp(g, t, u, w, u + 1, w,
              is_occ ? EdgeState::Occupied : EdgeState::Empty);
      }
      if (u + w + 1 <= m) {
        bool is_occ = occ.count({{u, w}, {u, w + 1}}) > 0;
        stamp(g, t, u, w, u, w + 1,
              is_occ ? EdgeState::Occupied : EdgeState::Empty);
      }
    }
}

void seed_stairs(const ArchGeometry& geo, FplGrid& g) {
  std::array<int, 3> centres{geo.A, geo.B, geo.C};
  std::vector<StubInfo> vs;
  for (int p : centres) vs.push_back(stub_info(g, p));
  int stairs = 0;
  for (int i = 0; i < 3; ++i)
    for (const Territory& t : territories_of(g, centres[i])) {
      bool foreign = false;
      for (int j = 0; j < 3; ++j)
        if (j != i && territory_contains(t, vs[j].x, vs[j].y)) foreign = true;
      if (foreign) continue;
      ++stairs;
      if (t.m > 0) seed_one_stair(g, t);
    }
  if (stairs != 4)
    throw Error(ErrorKind::structure, "staircase census is not 4");
}

// ---------------------------------------------------------------------------
// Propagation
// ---------------------------------------------------------------------------

// Open-path bookkeeping over occupied edges: for every vertex that is the
// dangling end of a maximal occupied path, what lies at the far end.
struct FragEnds {
  // vertex key -> (fragment id, far-end stub position or -1, far-end vertex
  // key or -1)
  std::map<int, std::tuple<int, int, int>> at;
};

int vkey(const FplGrid& g, int x, int y) { return y * g.n() + x; }

// Walks a maximal occupied path starting along edge `eid` into vertex (x,y).
// Marks edges visited. Returns {stub_pos, vertex_key} with exactly one >= 0.
std::pair<int, int> walk_path(const FplGrid& g, std::vector<char>& seen,
                              int eid, int x, int y) {
  for (;;) {
    seen[eid] = 1;
    int next = -1, nd = -1;
    for (int d = 0; d < 4; ++d) {
      int e = g.incident(x, y, d);
      if (e != eid && g.get(e) == EdgeState::Occupied) {
        if (next != -1)
          throw Error(ErrorKind::contradiction, "vertex above degree 2");
        next = e;
        nd = d;
      }
    }
    if (next == -1) return {-1, vkey(g, x, y)};
    if (g.is_stub(next)) {
      seen[next] = 1;
      return {next - 2 * g.n() * (g.n() - 1), -1};
    }
    eid = next;
    x += kDx[nd];
    y += kDy[nd];
  }
}

FragEnds trace_fragments(const FplGrid& g, const BoundaryPairing& pairing) {
  int n = g.n();
  FragEnds fr;
  std::vector<char> seen(g.edge_count(), 0);
  int frag = 0;
  auto record = [&](std::pair<int, int> e1, std::pair<int, int> e2) {
    if (e1.first >= 0 && e2.first >= 0) {
      if (pairing[e1.first] != e2.first)
        throw Error(ErrorKind::contradiction, "path joins non-partner stubs");
    }
    if (e1.second >= 0) fr.at[e1.second] = {frag, e2.first, e2.second};
    if (e2.second >= 0) fr.at[e2.second] = {frag, e1.first, e1.second};
    ++frag;
  };
  for (int p = 0; p < 4 * n; ++p) {
    int e = g.xid(p);
    if (seen[e] || g.get(e) != EdgeState::Occupied) continue;
    seen[e] = 1;
    int x, y, d;
    g.stub_vertex(p, x, y, d);
    record({p, -1}, walk_path(g, seen, e, x, y));
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (g.occupied_degree(x, y) != 1) continue;
      for (int d = 0; d < 4; ++d) {
        int e = g.incident(x, y, d);
        if (g.get(e) == EdgeState::Occupied && !seen[e] && !g.is_stub(e)) {
          record({-1, vkey(g, x, y)},
                 walk_path(g, seen, e, x + kDx[d], y + kDy[d]));
        }
      }
    }
  // Anything still unvisited is a closed occupied loop: no dangling ends.
  return fr;
}

}  // namespace

bool degier_step(FplGrid& g, const BoundaryPairing& pairing) {
  int n = g.n();
  if (static_cast<int>(pairing.size()) != 4 * n)
    throw Error(ErrorKind::invalid_grid, "pairing size mismatch");
  bool changed = false;
  // Degree closure sweep.
  bool local = true;
  while (local) {
    local = false;
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        int occ = g.occupied_degree(x, y), und = g.undetermined_degree(x, y);
        if (occ > 2 || occ + und < 2)
          throw Error(ErrorKind::contradiction, "vertex degree broken");
        if (und == 0) continue;
        if (occ == 2) {
          for (int d = 0; d < 4; ++d) {
            int e = g.incident(x, y, d);
            if (g.get(e) == EdgeState::Undetermined)
              g.set(e, EdgeState::Empty);
          }
          local = changed = true;
        } else if (occ + und == 2) {
          for (int d = 0; d < 4; ++d) {
            int e = g.incident(x, y, d);
            if (g.get(e) == EdgeState::Undetermined)
              g.set(e, EdgeState::Occupied);
          }
          local = changed = true;
        }
      }
  }
  if (changed) return true;

  // Fragment audit (throws on mismatched complete paths)...
  FragEnds fr = trace_fragments(g, pairing);

  // ...then the per-vertex case split: an edge forced the same way across
  // every locally legal completion is fixed.
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      int occ = g.occupied_degree(x, y);
      std::vector<int> und;
      for (int d = 0; d < 4; ++d)
        if (g.get(g.incident(x, y, d)) == EdgeState::Undetermined)
          und.push_back(d);
      if (und.empty()) continue;
      int need = 2 - occ;
      int self = vkey(g, x, y);
      // Existing dangling branch at this vertex, if any.
      int self_frag = -1, self_stub = -1, self_far = -1;
      if (auto it = fr.at.find(self); it != fr.at.end())
        std::tie(self_frag, self_stub, self_far) = it->second;

      std::vector<std::vector<int>> legal;  // chosen occupied-dir subsets
      int k = static_cast<int>(und.size());
      for (int mask = 0; mask < (1 << k); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != need) continue;
        // Far ends of the merged path through this vertex; a closed loop
        // (both branches in one fragment) imposes nothing.
        std::vector<std::pair<int, int>> ends;  // (stub,-1) or (-1,frag)
        bool ok = true;
        std::vector<int> branch_frags;
        if (occ == 1) {
          ends.push_back({self_stub, self_frag});
          branch_frags.push_back(self_frag);
        }
        for (int i = 0; i < k && ok; ++i) {
          if (!(mask & (1 << i))) continue;
          int e = g.incident(x, y, und[i]);
          if (g.is_stub(e)) {
            ends.push_back({e - 2 * n * (n - 1), -2});
            branch_frags.push_back(-2);
            continue;
          }
          int wx = x + kDx[und[i]], wy = y + kDy[und[i]];
          int wocc = g.occupied_degree(wx, wy);
          if (wocc >= 2) {
            ok = false;  // saturated far endpoint
            break;
          }
          if (wocc == 0) {
            ends.push_back({-1, -3});
            branch_frags.push_back(-3);
          } else {
            auto it = fr.at.find(vkey(g, wx, wy));
            if (it == fr.at.end())
              throw Error(ErrorKind::structure, "fragment table incomplete");
            auto [fid, fstub, ffar] = it->second;
            ends.push_back({fstub, fid});
            branch_frags.push_back(fid);
          }
        }
        if (!ok) continue;
        if (ends.size() == 2) {
          // Joining the two ends of one fragment would seal a closed loop;
          // configurations of a fixed type have none.
          if (branch_frags[0] >= 0 && branch_frags[0] == branch_frags[1])
            continue;
          int s0 = ends[0].first, s1 = ends[1].first;
          if (s0 >= 0 && s1 >= 0 && pairing[s0] != s1) continue;  // refuted
        }
        legal.push_back([&] {
          std::vector<int> dirs;
          for (int i = 0; i < k; ++i)
            if (mask & (1 << i)) dirs.push_back(und[i]);
          return dirs;
        }());
      }
      if (legal.empty())
        throw Error(ErrorKind::contradiction, "no legal vertex completion");
      for (int i = 0; i < k; ++i) {
        int cnt = 0;
        for (const auto& dirs : legal)
          if (std::find(dirs.begin(), dirs.end(), und[i]) != dirs.end()) ++cnt;
        if (cnt == 0 || cnt == static_cast<int>(legal.size())) {
          g.set(g.incident(x, y, und[i]),
                cnt ? EdgeState::Occupied : EdgeState::Empty);
          return true;  // fragment table is stale now; caller re-runs
        }
      }
    }
  return false;
}

namespace {

void fixpoint(FplGrid& g, const BoundaryPairing& pr) {
  while (degier_step(g, pr)) {
  }
}

// Singleton probing at a given depth: assume each value for an open edge and
// propagate (recursively probing when depth > 0); a dead value pins the
// opposite one.  Returns true if any edge was determined.
bool probe_pass(FplGrid& g, const BoundaryPairing& pr, int depth) {
  bool any = false;
  for (int e = 0; e < g.internal_edge_count(); ++e) {
    if (g.get(e) != EdgeState::Undetermined) continue;
    for (EdgeState v : {EdgeState::Occupied, EdgeState::Empty}) {
      FplGrid probe = g;
      probe.set(e, v);
      bool dead = false;
      try {
        fixpoint(probe, pr);
        if (depth > 0)
          while (probe_pass(probe, pr, depth - 1)) {
          }
      } catch (const Error& err) {
        if (err.kind != ErrorKind::contradiction) throw;
        dead = true;
      }
      if (dead) {
        g.set(e, v == EdgeState::Occupied ? EdgeState::Empty
                                          : EdgeState::Occupied);
        fixpoint(g, pr);
        any = true;
        break;
      }
    }
  }
  return any;
}

// First structural defect of a candidate fixed map, if any: every vertex
// carries a determined edge, horizontal edges inside the rectangle CB'DA''
// are determined, and everything outside the path region is determined.
std::optional<std::string> fixed_map_defect(const ArchGeometry& geo,
                                            const FplGrid& g) {
  int n = geo.n;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      int det = 0;
      for (int d = 0; d < 4; ++d)
        if (g.get(g.incident(x, y, d)) != EdgeState::Undetermined) ++det;
      if (det == 0) return "vertex with no fixed edge";
    }
  std::vector<P2> rect{geo.pC, geo.pB1, geo.pD, geo.pA2};
  for (int e = 0; e < g.internal_edge_count(); ++e) {
    if (g.get(e) != EdgeState::Undetermined) continue;
    EdgeRef r = g.ref(e);
    int x0 = r.i, y0 = r.j;
    int x1 = r.kind == 'H' ? r.i + 1 : r.i;
    int y1 = r.kind == 'H' ? r.j : r.j + 1;
    auto [ax0, ay0] = apply_vertex(geo.norm, n, x0, y0);
    auto [ax1, ay1] = apply_vertex(geo.norm, n, x1, y1);
    P2 mid{ax0 + ax1, ay0 + ay1};
    if (ay0 == ay1 && region_side(rect, mid) != Region::outside)
      return "open horizontal edge in rectangle";
    if (region_side(geo.poly_pp, mid) == Region::outside)
      return "open edge outside the path region";
  }
  // Open edges must decompose into dominos: three per cell around an
  // occupied middle.
  for (int cy = 0; cy + 1 < n; ++cy)
    for (int cx = 0; cx + 1 < n; ++cx) {
      int und = 0, occ = 0;
      for (int e : {g.hid(cx, cy), g.hid(cx, cy + 1), g.vid(cx, cy),
                    g.vid(cx + 1, cy)}) {
        if (g.get(e) == EdgeState::Undetermined) ++und;
        if (g.get(e) == EdgeState::Occupied) ++occ;
      }
      if (und == 4 || (und == 3 && occ != 1))
        return "cell is not domino-shaped";
    }
  return std::nullopt;
}

}  // namespace

FplGrid fixed_edges(const ArchGeometry& geo) {
  FplGrid g = boundary(geo.n, geo.parity);
  BoundaryPairing pr = type_pairing(geo);
  seed_stairs(geo, g);
  fixpoint(g, pr);
  // Escalating propagation: plain probing resolves most layouts; a deeper
  // probe pass is only spent where the map is visibly incomplete, and every
  // gain drops back to the cheapest level.
  for (int depth = 0; depth <= 2 && fixed_map_defect(geo, g);)
    depth = probe_pass(g, pr, depth) ? 0 : depth + 1;

  if (auto defect = fixed_map_defect(geo, g))
    throw Error(ErrorKind::structure, *defect);
  return g;
}

// ---------------------------------------------------------------------------
// Active region
// ---------------------------------------------------------------------------

int ActiveRegion::domino_at_face(int i, int j) const {
  for (size_t k = 0; k < dominos.size(); ++k)
    if (dominos[k].face == std::pair<int, int>{i, j})
      return static_cast<int>(k);
  return -1;
}

namespace {

// All rotation-respecting isomorphisms from the undetermined-edge graph to
// the triangle adjacency graph; mappings are reported over `order`.
// chir_only restricts the cyclic-order matching to one handedness.
std::vector<std::vector<int>> rotation_isos(
    const std::vector<std::vector<int>>& rot_sq,
    const std::vector<std::vector<int>>& rot_hex,
    const std::vector<int>& order, int chir_only) {
  int nv = static_cast<int>(rot_sq.size());
  std::set<std::vector<int>> found;
  if (nv == 0 || rot_sq.size() != rot_hex.size()) return {};
  int v0 = order[0];
  int d0 = static_cast<int>(rot_sq[v0].size());
  for (int t0 = 0; t0 < nv; ++t0) {
    if (static_cast<int>(rot_hex[t0].size()) != d0) continue;
    for (int chir : {1, -1}) {
      if (chir_only != 0 && chir != chir_only) continue;
      for (int off = 0; off < d0; ++off) {
        std::vector<int> img(nv, -1), pre(nv, -1);
        img[v0] = t0;
        pre[t0] = v0;
        bool ok = true;
        std::queue<std::pair<int, int>> q;  // (vertex, aligned neighbor idx)
        auto assign = [&](int v, int t) {
          if (img[v] == -1 && pre[t] == -1) {
            img[v] = t;
            pre[t] = v;
            return true;
          }
          return img[v] == t && pre[t] == v;
        };
        for (int i = 0; i < d0 && ok; ++i) {
          int w = rot_sq[v0][i];
          int u = rot_hex[t0][(((off + chir * i) % d0) + d0) % d0];
          ok = assign(w, u);
          if (ok) q.push({w, v0});
        }
        while (ok && !q.empty()) {
          auto [v, back] = q.front();
          q.pop();
          int dv = static_cast<int>(rot_sq[v].size());
          if (static_cast<int>(rot_hex[img[v]].size()) != dv) {
            ok = false;
            break;
          }
          int iv = -1, ju = -1;
          for (int i = 0; i < dv; ++i) {
            if (rot_sq[v][i] == back) iv = i;
            if (rot_hex[img[v]][i] == img[back]) ju = i;
          }
          if (iv < 0 || ju < 0) {
            ok = false;
            break;
          }
          for (int s = 0; s < dv && ok; ++s) {
            int w = rot_sq[v][(iv + s) % dv];
            int u = rot_hex[img[v]][(((ju + chir * s) % dv) + dv) % dv];
            bool fresh = img[w] == -1;
            ok = assign(w, u);
            if (ok && fresh) q.push({w, v});
          }
        }
        if (!ok) continue;
        bool total = true;
        for (int v = 0; v < nv; ++v)
          if (img[v] == -1) total = false;
        if (!total) continue;
        std::vector<int> key;
        key.reserve(nv);
        for (int v : order) key.push_back(img[v]);
        found.insert(std::move(key));
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

ActiveRegion active_region(const ArchGeometry& geo, const FplGrid& fixed) {
  int n = geo.n;
  ActiveRegion ar;
  ar.geo = geo;
  ar.fixed = fixed;
  ar.hex = honeycomb_region(geo.a, geo.b, geo.c);
  const FplGrid& g = fixed;

  auto is_und = [&](int e) { return g.get(e) == EdgeState::Undetermined; };

  // Cells with exactly three open borders and one occupied one pair up into
  // dominos across the occupied middles.
  std::map<std::pair<int, int>, int> cell_occ;  // active cell -> middle edge
  for (int cy = 0; cy + 1 < n; ++cy)
    for (int cx = 0; cx + 1 < n; ++cx) {
      std::array<int, 4> es{g.hid(cx, cy), g.hid(cx, cy + 1), g.vid(cx, cy),
                            g.vid(cx + 1, cy)};
      int und = 0, occ = 0, occ_edge = -1;
      for (int e : es) {
        if (is_und(e)) ++und;
        if (g.get(e) == EdgeState::Occupied) {
          ++occ;
          occ_edge = e;
        }
      }
      // Cells outside the region may still touch one or two domino borders.
      if (und < 3) continue;
      if (und != 3 || occ != 1)
        throw Error(ErrorKind::structure, "cell is not domino-shaped");
      cell_occ[{cx, cy}] = occ_edge;
    }
  std::set<std::pair<int, int>> used;
  for (const auto& [cell, mid] : cell_occ) {
    if (used.count(cell)) continue;
    EdgeRef r = g.ref(mid);
    std::pair<int, int> other;
    if (r.kind == 'V')
      other = r.i == cell.first ? std::pair{cell.first - 1, cell.second}
                                : std::pair{cell.first + 1, cell.second};
    else
      other = r.j == cell.second ? std::pair{cell.first, cell.second - 1}
                                 : std::pair{cell.first, cell.second + 1};
    auto it = cell_occ.find(other);
    if (it == cell_occ.end() || it->second != mid || used.count(other))
      throw Error(ErrorKind::structure, "unpaired active cell");
    used.insert(cell);
    used.insert(other);
    Domino dm;
    auto [x0c, y0c] = std::min(cell, other);
    dm.cx0 = x0c;
    dm.cy0 = y0c;
    auto [x1c, y1c] = std::max(cell, other);
    dm.cx1 = x1c;
    dm.cy1 = y1c;
    dm.middle = mid;
    if (r.kind == 'V') {  // horizontal domino, counterclockwise border
      int x = dm.cx0, y = dm.cy0;
      dm.border = {g.hid(x, y),     g.hid(x + 1, y),     g.vid(x + 2, y),
                   g.hid(x + 1, y + 1), g.hid(x, y + 1), g.vid(x, y)};
    } else {  // vertical domino
      int x = dm.cx0, y = dm.cy0;
      dm.border = {g.hid(x, y),     g.vid(x + 1, y), g.vid(x + 1, y + 1),
                   g.hid(x, y + 2), g.vid(x, y + 1), g.vid(x, y)};
    }
    for (int e : dm.border)
      if (!is_und(e))
        throw Error(ErrorKind::structure, "domino border not open");
    ar.dominos.push_back(dm);
  }
  if (used.size() != cell_occ.size())
    throw Error(ErrorKind::structure, "active cells left over");

  // The undetermined-edge graph.
  std::map<std::pair<int, int>, int> vid;
  for (int e = 0; e < g.internal_edge_count(); ++e) {
    if (!is_und(e)) continue;
    EdgeRef r = g.ref(e);
    int x1 = r.kind == 'H' ? r.i + 1 : r.i;
    int y1 = r.kind == 'H' ? r.j : r.j + 1;
    for (auto [vx, vy] : {std::pair{r.i, r.j}, std::pair{x1, y1}})
      if (!vid.count({vx, vy})) {
        vid[{vx, vy}] = 0;
        ar.verts.push_back({vx, vy});
      }
  }
  // Canonical vertex order: by normalized coordinates.
  std::sort(ar.verts.begin(), ar.verts.end(),
            [&](const std::pair<int, int>& l, const std::pair<int, int>& r2) {
              auto ln = apply_vertex(geo.norm, n, l.first, l.second);
              auto rn = apply_vertex(geo.norm, n, r2.first, r2.second);
              return std::pair(ln.second, ln.first) <
                     std::pair(rn.second, rn.first);
            });
  for (size_t i = 0; i < ar.verts.size(); ++i)
    vid[ar.verts[i]] = static_cast<int>(i);

  int nv = static_cast<int>(ar.verts.size());
  if (nv != static_cast<int>(ar.hex.tris.size()))
    throw Error(ErrorKind::structure, "active vertex count mismatch");
  std::vector<std::vector<int>> rot_sq(nv);
  for (int i = 0; i < nv; ++i) {
    auto [x, y] = ar.verts[i];
    int det_occ = 0;
    std::vector<std::pair<int, int>> nb;  // (normalized ccw dir, neighbor)
    for (int d = 0; d < 4; ++d) {
      int e = g.incident(x, y, d);
      if (g.get(e) == EdgeState::Occupied) ++det_occ;
      if (!g.is_stub(e) && is_und(e)) {
        int wx = x + kDx[d], wy = y + kDy[d];
        nb.push_back({apply_dir(geo.norm, d), vid[{wx, wy}]});
      }
    }
    if (det_occ != 1)
      throw Error(ErrorKind::structure, "active vertex without its dimer seat");
    std::sort(nb.begin(), nb.end());
    for (auto& [d, w] : nb) rot_sq[i].push_back(w);
  }
  std::vector<std::vector<int>> rot_hex(ar.hex.tris.size());
  for (size_t t = 0; t < ar.hex.tris.size(); ++t)
    for (const TriRef& nbtri : ar.hex.neighbors((int)t)) {
      int u = ar.hex.tri_index(nbtri);
      if (u >= 0) rot_hex[t].push_back(u);
    }

  std::vector<int> order(nv);
  for (int i = 0; i < nv; ++i) order[i] = i;
  auto isos = rotation_isos(rot_sq, rot_hex, order, 0);
  if (isos.empty())
    throw Error(ErrorKind::structure, "active region is not the hexagon");

  // Each candidate correspondence extends to an affine map from the grid
  // plane onto the triangular lattice.  The deformation is drawn in the
  // normalized frame (C's side at the bottom), so the right candidate is the
  // one that is orientation-preserving and rotates the region the least
  // there: positive determinant, maximal trace of the realized plane map.
  // Both are exact integer tests on the linear part (the trace comparison
  // rationalizes sqrt(3)).
  auto abspos = [&](int t) {
    const TriRef& tr = ar.hex.tris[t];
    int d = tr.up ? 1 : 2;
    return std::pair<long long, long long>(3LL * tr.i + d, 3LL * tr.j + d);
  };
  auto norm_delta = [&](int vtx) {
    long long dx = ar.verts[vtx].first - ar.verts[0].first;
    long long dy = ar.verts[vtx].second - ar.verts[0].second;
    if (geo.norm.swap) std::swap(dx, dy);
    if (geo.norm.negx) dx = -dx;
    if (geo.norm.negy) dy = -dy;
    return std::pair<long long, long long>(2 * dx, 2 * dy);
  };
  int v1 = 1, v2 = -1;
  auto [p1x, p1y] = norm_delta(1);
  long long p2x = 0, p2y = 0, den = 0;
  for (int v = 2; v < nv && den == 0; ++v) {
    std::tie(p2x, p2y) = norm_delta(v);
    den = p1x * p2y - p1y * p2x;
    if (den != 0) v2 = v;
  }
  if (den < 0) {
    std::swap(v1, v2);
    std::swap(p1x, p2x);
    std::swap(p1y, p2y);
    den = -den;
  }
  // N/den maps doubled normalized deltas to (3i,3j)-scaled triangle centers.
  auto linear_part = [&](const std::vector<int>& iso) {
    auto [qx0, qy0] = abspos(iso[0]);
    auto [q1x, q1y] = abspos(iso[v1]);
    auto [q2x, q2y] = abspos(iso[v2]);
    q1x -= qx0; q1y -= qy0; q2x -= qx0; q2y -= qy0;
    return std::array<long long, 4>{q1x * p2y - q2x * p1y, q2x * p1x - q1x * p2x,
                                    q1y * p2y - q2y * p1y, q2y * p1x - q1y * p2x};
  };
  int iso_pick = -1;
  bool raw = false;
  if (const char* av = std::getenv("FPL_ANCHOR")) {
    if (std::strncmp(av, "iso:", 4) == 0)
      iso_pick = std::atoi(av + 4);
    else if (std::strncmp(av, "raw:", 4) == 0) {
      iso_pick = std::atoi(av + 4);
      raw = true;
    }
  }
  // sign of u + sqrt(3) v
  auto root3_sign = [](long long u, long long v) -> int {
    if (u >= 0 && v >= 0) return (u || v) ? 1 : 0;
    if (u <= 0 && v <= 0) return (u || v) ? -1 : 0;
    long long lhs = u * u, rhs = 3 * v * v;
    if (lhs == rhs) return 0;
    return (lhs > rhs) == (u > 0) ? 1 : -1;
  };
  std::vector<int> keep;
  for (size_t k = 0; k < isos.size(); ++k) {
    auto nk = linear_part(isos[k]);
    if (raw || nk[0] * nk[3] - nk[1] * nk[2] > 0) keep.push_back((int)k);
  }
  if (keep.empty())
    throw Error(ErrorKind::structure, "active region is not the hexagon");
  int best = -1;
  if (iso_pick >= 0) {
    if (iso_pick >= (int)keep.size())
      throw Error(ErrorKind::structure, "iso index out of range");
    best = keep[iso_pick];
  } else {
    // Cartesian trace of N realized on the triangular lattice is
    // N00 + N10/2 + sqrt(3)/2 * N11, doubled here to stay integral.
    int want = (geo.norm.negx != geo.norm.negy) ? 1 : -1;
    long long bU = 0, bV = 0;
    for (int k : keep) {
      auto nk = linear_part(isos[k]);
      long long U = 2 * nk[0] + nk[2], V = nk[3];
      if (best < 0 || root3_sign(U - bU, V - bV) * want > 0) {
        best = k;
        bU = U;
        bV = V;
      }
    }
  }
  ar.vert_tri = isos[best];

  // Edge dictionary.
  ar.hex_to_sq.assign(ar.hex.edges.size(), -1);
  for (int e = 0; e < g.internal_edge_count(); ++e) {
    if (!is_und(e)) continue;
    EdgeRef r = g.ref(e);
    int x1 = r.kind == 'H' ? r.i + 1 : r.i;
    int y1 = r.kind == 'H' ? r.j : r.j + 1;
    int u = vid[{r.i, r.j}], v = vid[{x1, y1}];
    int he = ar.hex.edge_index(ar.vert_tri[u], ar.vert_tri[v]);
    if (he < 0) throw Error(ErrorKind::structure, "edge image missing");
    if (ar.hex_to_sq[he] != -1)
      throw Error(ErrorKind::structure, "edge image duplicated");
    ar.hex_to_sq[he] = e;
    ar.sq_to_hex[e] = he;
  }
  for (int he = 0; he < static_cast<int>(ar.hex.edges.size()); ++he)
    if (ar.hex_to_sq[he] < 0)
      throw Error(ErrorKind::structure, "honeycomb edge not covered");

  // Face coordinates: the unique lattice point common to all six border
  // triangles of each domino.
  auto corners_of = [&](const TriRef& t) {
    std::vector<std::pair<int, int>> c;
    if (t.up)
      c = {{t.i, t.j}, {t.i + 1, t.j}, {t.i, t.j + 1}};
    else
      c = {{t.i + 1, t.j}, {t.i, t.j + 1}, {t.i + 1, t.j + 1}};
    return c;
  };
  std::set<std::pair<int, int>> face_seen;
  for (Domino& dm : ar.dominos) {
    std::map<std::pair<int, int>, int> hits;
    std::set<int> ring;
    for (int e : dm.border) {
      auto [t0, t1] = ar.hex.edges[ar.sq_to_hex.at(e)];
      ring.insert(t0);
      ring.insert(t1);
    }
    if (ring.size() != 6)
      throw Error(ErrorKind::structure, "domino ring is not six triangles");
    for (int t : ring)
      for (auto pt : corners_of(ar.hex.tris[t])) hits[pt]++;
    std::pair<int, int> face{0, 0};
    int found = 0;
    for (const auto& [pt, cnt] : hits)
      if (cnt == 6) {
        face = pt;
        ++found;
      }
    if (found != 1)
      throw Error(ErrorKind::structure, "domino has no unique face point");
    dm.face = face;
    if (!face_seen.insert(face).second)
      throw Error(ErrorKind::structure, "two dominos on one face");
  }
  auto faces = ar.hex.faces();
  if (faces.size() != ar.dominos.size())
    throw Error(ErrorKind::structure, "domino count differs from face count");
  for (auto f : faces)
    if (!face_seen.count(f))
      throw Error(ErrorKind::structure, "face without a domino");
  return ar;
}

}  // namespace fpl

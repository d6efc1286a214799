#include "fpl/honeycomb.hpp"

#include <algorithm>
#include <array>

namespace fpl {

namespace {

std::array<std::pair<int, int>, 3> tri_corners(const TriRef& t) {
  if (t.up)
    return {{{t.i, t.j}, {t.i + 1, t.j}, {t.i, t.j + 1}}};
  return {{{t.i + 1, t.j}, {t.i, t.j + 1}, {t.i + 1, t.j + 1}}};
}

}  // namespace

bool HoneycombRegion::contains_point(int i, int j) const {
  return -b <= i && i <= a && -c <= j && j <= b && -c <= i + j && i + j <= a;
}

int HoneycombRegion::tri_index(const TriRef& t) const {
  auto it = tri_id_.find(t);
  return it == tri_id_.end() ? -1 : it->second;
}

int HoneycombRegion::edge_index(int t0, int t1) const {
  if (t0 > t1) std::swap(t0, t1);
  auto it = edge_id_.find({t0, t1});
  return it == edge_id_.end() ? -1 : it->second;
}

std::array<TriRef, 3> HoneycombRegion::neighbors(int t) const {
  // Counterclockwise candidate lists (fixed by the lattice embedding).
  const TriRef& r = tris[t];
  if (r.up)
    return {TriRef{r.i, r.j - 1, false}, TriRef{r.i, r.j, false},
            TriRef{r.i - 1, r.j, false}};
  return {TriRef{r.i, r.j, true}, TriRef{r.i + 1, r.j, true},
          TriRef{r.i, r.j + 1, true}};
}

std::vector<std::pair<int, int>> HoneycombRegion::faces() const {
  std::vector<std::pair<int, int>> out;
  for (int i = -b + 1; i <= a - 1; ++i)
    for (int j = -c + 1; j <= b - 1; ++j)
      if (-c < i + j && i + j < a) out.push_back({i, j});
  return out;
}

HoneycombRegion honeycomb_region(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1)
    throw Error(ErrorKind::incompatible_box, "degenerate hexagon");
  HoneycombRegion r;
  r.a = a;
  r.b = b;
  r.c = c;
  auto tri_inside = [&](const TriRef& t) {
    for (auto [i, j] : tri_corners(t))
      if (!r.contains_point(i, j)) return false;
    return true;
  };
  for (int i = -b - 1; i <= a + 1; ++i)
    for (int j = -c - 1; j <= b + 1; ++j)
      for (bool up : {false, true}) {
        TriRef t{i, j, up};
        if (tri_inside(t)) r.tris.push_back(t);
      }
  std::sort(r.tris.begin(), r.tris.end());
  for (size_t k = 0; k < r.tris.size(); ++k) r.tri_id_[r.tris[k]] = (int)k;

  for (size_t k = 0; k < r.tris.size(); ++k) {
    if (!r.tris[k].up) continue;
    for (const TriRef& nb : r.neighbors((int)k)) {
      int m = r.tri_index(nb);
      if (m < 0) continue;
      int t0 = (int)k, t1 = m;
      if (t0 > t1) std::swap(t0, t1);
      r.edges.push_back({t0, t1});
    }
  }
  std::sort(r.edges.begin(), r.edges.end());
  for (size_t k = 0; k < r.edges.size(); ++k) r.edge_id_[r.edges[k]] = (int)k;

  // Boundary stubs, ccw starting at corner (a,0).
  const std::pair<int, int> corner[6] = {{a, 0},     {a - b, b}, {-b, b},
                                         {-b, b - c}, {0, -c},    {a, -c}};
  for (int s = 0; s < 6; ++s) {
    auto [x0, y0] = corner[s];
    auto [x1, y1] = corner[(s + 1) % 6];
    int len = std::max({std::abs(x1 - x0), std::abs(y1 - y0)});
    int dx = (x1 - x0) / len, dy = (y1 - y0) / len;
    for (int t = 0; t < len; ++t) {
      int i = x0 + t * dx, j = y0 + t * dy;
      // The two triangles sharing the unit segment from (i,j) in direction
      // (dx,dy); exactly one lies inside the hexagon.
      TriRef cand[2];
      if (dx == 1 && dy == 0) {
        cand[0] = {i, j, true};
        cand[1] = {i, j - 1, false};
      } else if (dx == -1 && dy == 0) {
        cand[0] = {i - 1, j, true};
        cand[1] = {i - 1, j - 1, false};
      } else if (dx == 0 && dy == 1) {
        cand[0] = {i, j, true};
        cand[1] = {i - 1, j, false};
      } else if (dx == 0 && dy == -1) {
        cand[0] = {i, j - 1, true};
        cand[1] = {i - 1, j - 1, false};
      } else if (dx == -1 && dy == 1) {
        cand[0] = {i - 1, j, true};
        cand[1] = {i - 1, j, false};
      } else {  // (1,-1)
        cand[0] = {i, j - 1, true};
        cand[1] = {i, j - 1, false};
      }
      int in0 = r.tri_index(cand[0]), in1 = r.tri_index(cand[1]);
      if ((in0 < 0) == (in1 < 0))
        throw Error(ErrorKind::structure, "hexagon boundary side not unique");
      if (in0 >= 0)
        r.stubs.push_back({in0, cand[1]});
      else
        r.stubs.push_back({in1, cand[0]});
    }
  }
  if ((int)r.stubs.size() != 2 * (a + b + c))
    throw Error(ErrorKind::structure, "stub count mismatch");
  return r;
}

namespace {

// Height accessor with the sentinel rows/columns used by the lozenge sweep.
int h_at(const PlanePartition& pp, int p, int q) {
  if (p < 0 || q < 0) return pp.c;
  if (p >= pp.a || q >= pp.b) return 0;
  return pp.rows[p][q];
}

}  // namespace

DimerConfig pp_to_tiling(const PlanePartition& pp) {
  pp.validate();
  HoneycombRegion r = honeycomb_region(pp.a, pp.b, pp.c);
  std::vector<int> picked;
  auto add = [&](const TriRef& t0, const TriRef& t1) {
    int k0 = r.tri_index(t0), k1 = r.tri_index(t1);
    if (k0 < 0 || k1 < 0)
      throw Error(ErrorKind::structure, "lozenge outside region");
    int e = r.edge_index(k0, k1);
    if (e < 0) throw Error(ErrorKind::structure, "lozenge pair not adjacent");
    picked.push_back(e);
  };
  // Top lozenges: one per column (p,q), at height h.
  for (int p = 0; p < pp.a; ++p)
    for (int q = 0; q < pp.b; ++q) {
      int h = h_at(pp, p, q);
      add({p - q, q - h, true}, {p - q - 1, q - h, false});
    }
  // X-facing lozenges along each height run between columns p-1 and p.
  for (int q = 0; q < pp.b; ++q)
    for (int p = 0; p <= pp.a; ++p)
      for (int h = h_at(pp, p, q); h < h_at(pp, p - 1, q); ++h)
        add({p - q - 1, q - h, true}, {p - q - 1, q - h - 1, false});
  // Y-facing lozenges along each height run between columns q-1 and q.
  for (int p = 0; p < pp.a; ++p)
    for (int q = 0; q <= pp.b; ++q)
      for (int h = h_at(pp, p, q); h < h_at(pp, p, q - 1); ++h)
        add({p - q, q - h - 1, true}, {p - q, q - h - 1, false});

  std::sort(picked.begin(), picked.end());
  DimerConfig d;
  d.a = pp.a;
  d.b = pp.b;
  d.c = pp.c;
  d.edges = std::move(picked);
  // Perfect-matching sanity on the construction itself.
  std::vector<int> deg(r.tris.size(), 0);
  for (int e : d.edges) {
    deg[r.edges[e].first]++;
    deg[r.edges[e].second]++;
  }
  for (int dd : deg)
    if (dd != 1) throw Error(ErrorKind::structure, "tiling is not a matching");
  return d;
}

PlanePartition tiling_to_pp(const DimerConfig& d) {
  HoneycombRegion r = honeycomb_region(d.a, d.b, d.c);
  std::vector<char> in_matching(r.edges.size(), 0);
  std::vector<int> deg(r.tris.size(), 0);
  for (int e : d.edges) {
    if (e < 0 || e >= (int)r.edges.size())
      throw Error(ErrorKind::not_a_matching, "edge index out of range");
    if (in_matching[e])
      throw Error(ErrorKind::not_a_matching, "duplicate edge");
    in_matching[e] = 1;
    deg[r.edges[e].first]++;
    deg[r.edges[e].second]++;
  }
  for (int dd : deg)
    if (dd != 1)
      throw Error(ErrorKind::not_a_matching, "not a perfect matching");

  PlanePartition pp;
  pp.a = d.a;
  pp.b = d.b;
  pp.c = d.c;
  pp.rows.assign(d.a, std::vector<int>(d.b, 0));
  // Columns with equal p-q look at the same diagonal of z-lozenges; along it
  // the heights decrease, so matched j-values sorted ascending line up with
  // the columns sorted by q.
  for (int i = -(d.b - 1); i <= d.a - 1; ++i) {
    std::vector<int> js;
    for (size_t e = 0; e < r.edges.size(); ++e) {
      if (!in_matching[e]) continue;
      const TriRef& u =
          r.tris[r.edges[e].first].up ? r.tris[r.edges[e].first]
                                      : r.tris[r.edges[e].second];
      const TriRef& dn =
          r.tris[r.edges[e].first].up ? r.tris[r.edges[e].second]
                                      : r.tris[r.edges[e].first];
      if (u.i == i && dn.i == i - 1 && dn.j == u.j) js.push_back(u.j);
    }
    std::sort(js.begin(), js.end());
    size_t k = 0;
    for (int q = 0; q < d.b; ++q) {
      int p = i + q;
      if (p < 0 || p >= d.a) continue;
      if (k >= js.size())
        throw Error(ErrorKind::not_a_matching, "no top lozenge for column");
      int h = q - js[k++];
      if (h < 0 || h > d.c)
        throw Error(ErrorKind::not_a_matching, "column height out of range");
      pp.rows[p][q] = h;
    }
    if (k != js.size())
      throw Error(ErrorKind::not_a_matching, "extra top lozenge on diagonal");
  }
  try {
    pp.validate();
  } catch (const Error&) {
    throw Error(ErrorKind::not_a_matching, "heights not monotone");
  }
  if (!(pp_to_tiling(pp) == d))
    throw Error(ErrorKind::not_a_matching, "matching is not a box tiling");
  return pp;
}

HfplConfig hfpl_complement(const DimerConfig& d) {
  HoneycombRegion r = honeycomb_region(d.a, d.b, d.c);
  std::vector<char> in_matching(r.edges.size(), 0);
  std::vector<int> deg(r.tris.size(), 0);
  for (int e : d.edges) {
    if (e < 0 || e >= (int)r.edges.size())
      throw Error(ErrorKind::not_a_matching, "edge index out of range");
    in_matching[e] = 1;
    deg[r.edges[e].first]++;
    deg[r.edges[e].second]++;
  }
  for (int dd : deg)
    if (dd != 1)
      throw Error(ErrorKind::not_a_matching, "not a perfect matching");

  HfplConfig out;
  out.a = d.a;
  out.b = d.b;
  out.c = d.c;
  for (size_t e = 0; e < r.edges.size(); ++e)
    if (!in_matching[e]) out.comp_edges.push_back((int)e);

  // Connections per triangle: unmatched internal edges plus boundary stubs.
  struct Conn {
    int other_tri;  // -1 for a stub
    int stub;       // stub index, -1 for internal
    int edge;       // edge index, -1 for stub
  };
  std::vector<std::vector<Conn>> conn(r.tris.size());
  for (size_t e = 0; e < r.edges.size(); ++e) {
    if (in_matching[e]) continue;
    auto [t0, t1] = r.edges[e];
    conn[t0].push_back({t1, -1, (int)e});
    conn[t1].push_back({t0, -1, (int)e});
  }
  for (size_t s = 0; s < r.stubs.size(); ++s)
    conn[r.stubs[s].first].push_back({-1, (int)s, -1});
  for (size_t t = 0; t < r.tris.size(); ++t)
    if (conn[t].size() != 2)
      throw Error(ErrorKind::structure, "complement degree is not 2");

  // Each triangle has exactly two connections; entering by one, leave by
  // the other.
  auto other = [&](int tri, int via_stub, int via_edge) -> const Conn& {
    const Conn& c0 = conn[tri][0];
    bool came_by_c0 =
        via_stub >= 0 ? c0.stub == via_stub : c0.edge == via_edge;
    return came_by_c0 ? conn[tri][1] : conn[tri][0];
  };

  out.stub_pair.assign(r.stubs.size(), -1);
  std::vector<char> tri_done(r.tris.size(), 0);
  for (size_t s0 = 0; s0 < r.stubs.size(); ++s0) {
    if (out.stub_pair[s0] != -1) continue;
    std::vector<int> run;
    int tri = r.stubs[s0].first;
    int via_stub = (int)s0, via_edge = -1;
    for (;;) {
      run.push_back(tri);
      tri_done[tri] = 1;
      const Conn& next = other(tri, via_stub, via_edge);
      if (next.stub >= 0) {
        out.stub_pair[s0] = next.stub;
        out.stub_pair[next.stub] = (int)s0;
        break;
      }
      via_edge = next.edge;
      via_stub = -1;
      tri = next.other_tri;
    }
    out.paths.push_back(std::move(run));
  }
  // Remaining triangles lie on internal loops.
  for (size_t t0 = 0; t0 < r.tris.size(); ++t0) {
    if (tri_done[t0]) continue;
    std::vector<int> run;
    int tri = (int)t0, via_edge = conn[t0][0].edge;  // leave by conn[1] first
    for (;;) {
      run.push_back(tri);
      tri_done[tri] = 1;
      const Conn& next = other(tri, -1, via_edge);
      if (next.stub >= 0)
        throw Error(ErrorKind::structure, "loop trace left the interior");
      via_edge = next.edge;
      tri = next.other_tri;
      if (tri == (int)t0) break;
    }
    out.loops.push_back(std::move(run));
  }
  return out;
}

}  // namespace fpl

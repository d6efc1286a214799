#include "fpl/grid.hpp"

#include <algorithm>
#include <array>

#include "fpl/geometry.hpp"

namespace fpl {

FplGrid::FplGrid(int n) : n_(n), st_(2 * n * n + 2 * n, EdgeState::Undetermined) {
  if (n < 1) throw Error(ErrorKind::invalid_grid, "n must be >= 1");
}

EdgeRef FplGrid::ref(int id) const {
  int nh = n_ * (n_ - 1);
  if (id < nh) return {'H', id % (n_ - 1), id / (n_ - 1)};
  if (id < 2 * nh) return {'V', (id - nh) % n_, (id - nh) / n_};
  return {'X', id - 2 * nh, 0};
}

int FplGrid::id(const EdgeRef& r) const {
  switch (r.kind) {
    case 'H': return hid(r.i, r.j);
    case 'V': return vid(r.i, r.j);
    case 'X': return xid(r.i);
  }
  throw Error(ErrorKind::parse, "bad edge kind");
}

int FplGrid::incident(int x, int y, int dir) const {
  switch (dir) {
    case kRight: return x < n_ - 1 ? hid(x, y) : xid(n_ + y);
    case kUp: return y < n_ - 1 ? vid(x, y) : xid(3 * n_ - 1 - x);
    case kLeft: return x > 0 ? hid(x - 1, y) : xid(4 * n_ - 1 - y);
    case kDown: return y > 0 ? vid(x, y - 1) : xid(x);
  }
  throw Error(ErrorKind::invalid_grid, "bad direction");
}

void FplGrid::stub_vertex(int p, int& x, int& y, int& dir) const {
  if (p < n_) { x = p; y = 0; dir = kDown; return; }
  if (p < 2 * n_) { x = n_ - 1; y = p - n_; dir = kRight; return; }
  if (p < 3 * n_) { x = 3 * n_ - 1 - p; y = n_ - 1; dir = kUp; return; }
  x = 0; y = 4 * n_ - 1 - p; dir = kLeft;
}

int FplGrid::occupied_degree(int x, int y) const {
  int d = 0;
  for (int s = 0; s < 4; s++) d += get(incident(x, y, s)) == EdgeState::Occupied;
  return d;
}

int FplGrid::undetermined_degree(int x, int y) const {
  int d = 0;
  for (int s = 0; s < 4; s++)
    d += get(incident(x, y, s)) == EdgeState::Undetermined;
  return d;
}

bool FplGrid::complete() const {
  return std::none_of(st_.begin(), st_.end(),
                      [](EdgeState s) { return s == EdgeState::Undetermined; });
}

FplGrid boundary(int n, int parity) {
  if (n < 1) throw Error(ErrorKind::invalid_grid, "n must be >= 1");
  if (parity != 0 && parity != 1)
    throw Error(ErrorKind::invalid_grid, "parity must be 0 or 1");
  FplGrid g(n);
  for (int p = 0; p < 4 * n; p++)
    g.set(g.xid(p), p % 2 == parity ? EdgeState::Occupied : EdgeState::Empty);
  return g;
}

int boundary_parity(const FplGrid& g) {
  int n = g.n();
  EdgeState s0 = g.get(g.xid(0));
  if (s0 == EdgeState::Undetermined)
    throw Error(ErrorKind::invalid_grid, "undetermined external edge");
  int parity = s0 == EdgeState::Occupied ? 0 : 1;
  for (int p = 0; p < 4 * n; p++) {
    EdgeState want = p % 2 == parity ? EdgeState::Occupied : EdgeState::Empty;
    if (g.get(g.xid(p)) != want)
      throw Error(ErrorKind::invalid_grid, "external edges do not alternate");
  }
  return parity;
}

void validate_complete(const FplGrid& g) {
  if (!g.complete())
    throw Error(ErrorKind::invalid_grid, "grid has undetermined edges");
  boundary_parity(g);
  for (int y = 0; y < g.n(); y++)
    for (int x = 0; x < g.n(); x++)
      if (g.occupied_degree(x, y) != 2)
        throw Error(ErrorKind::invalid_grid,
                    "vertex (" + std::to_string(x) + "," + std::to_string(y) +
                        ") has occupied degree != 2");
}

int LinkPattern::index_of(int position) const {
  if ((position - parity) % 2 != 0)
    throw Error(ErrorKind::invalid_grid, "position not in occupied class");
  return ((position - parity) / 2) % (2 * n);
}

namespace {

// Walks the open path entering at stub p; returns the exit stub position and
// marks every traversed edge id in `visited`.
int trace_path(const FplGrid& g, int p, std::vector<char>& visited) {
  int x, y, dir;
  g.stub_vertex(p, x, y, dir);
  visited[g.xid(p)] = 1;
  int came = dir;  // slot at (x,y) leading back out through the stub
  for (;;) {
    int next = -1;
    for (int s = 0; s < 4; s++) {
      if (s == came) continue;
      if (g.get(g.incident(x, y, s)) == EdgeState::Occupied) {
        if (next != -1)
          throw Error(ErrorKind::invalid_grid, "vertex degree > 2");
        next = s;
      }
    }
    if (next == -1) throw Error(ErrorKind::invalid_grid, "dangling path");
    int e = g.incident(x, y, next);
    visited[e] = 1;
    if (g.is_stub(e)) return e - g.xid(0);
    x += kDx[next];
    y += kDy[next];
    came = (next + 2) % 4;
  }
}

}  // namespace

LinkPattern link_pattern(const FplGrid& g) {
  validate_complete(g);
  int n = g.n();
  LinkPattern lp;
  lp.n = n;
  lp.parity = boundary_parity(g);
  lp.pair.assign(2 * n, -1);
  std::vector<char> visited(g.edge_count(), 0);
  for (int i = 0; i < 2 * n; i++) {
    if (lp.pair[i] != -1) continue;
    int p = lp.position_of(i);
    int q = trace_path(g, p, visited);
    int j = lp.index_of(q);
    if (j == i) throw Error(ErrorKind::invalid_grid, "path returns to itself");
    lp.pair[i] = j;
    lp.pair[j] = i;
  }
  return lp;
}

bool non_crossing(const LinkPattern& p) {
  int m = 2 * p.n;
  for (int i = 0; i < m; i++) {
    int j = p.pair[i];
    if (j <= i) continue;
    for (int k = i + 1; k < j; k++) {
      int l = p.pair[k];
      if (l < i || l > j) return false;
    }
  }
  return true;
}

LinkPattern rotate_pattern(const LinkPattern& p, int d) {
  int m = 2 * p.n;
  LinkPattern q = p;
  for (int i = 0; i < m; i++) {
    int i2 = ((i + d) % m + m) % m;
    q.pair[i2] = ((p.pair[i] + d) % m + m) % m;
  }
  return q;
}

int internal_loop_count(const FplGrid& g) {
  validate_complete(g);
  int n = g.n();
  std::vector<char> visited(g.edge_count(), 0);
  int parity = boundary_parity(g);
  for (int i = 0; i < 2 * n; i++) {
    int p = (2 * i + parity) % (4 * n);
    if (!visited[g.xid(p)]) trace_path(g, p, visited);
  }
  int loops = 0;
  for (int e = 0; e < g.internal_edge_count(); e++) {
    if (visited[e] || g.get(e) != EdgeState::Occupied) continue;
    loops++;
    // walk the cycle marking its edges
    EdgeRef r = g.ref(e);
    int x = r.i, y = r.j;
    int came = r.kind == 'H' ? kRight : kUp;  // first move along e
    visited[e] = 1;
    int cx = x + kDx[came], cy = y + kDy[came];
    came = (came + 2) % 4;
    while (cx != x || cy != y) {
      int next = -1;
      for (int s = 0; s < 4; s++) {
        if (s == came) continue;
        if (g.get(g.incident(cx, cy, s)) == EdgeState::Occupied) next = s;
      }
      int e2 = g.incident(cx, cy, next);
      visited[e2] = 1;
      cx += kDx[next];
      cy += kDy[next];
      came = (next + 2) % 4;
    }
  }
  return loops;
}

std::optional<std::vector<std::pair<int, int>>> detect_bundles(
    const std::vector<int>& pairing) {
  int m = static_cast<int>(pairing.size());
  if (m == 0 || m % 2) return std::nullopt;
  for (int i = 0; i < m; i++) {
    int j = pairing[i];
    if (j < 0 || j >= m || j == i || pairing[j] != i) return std::nullopt;
  }
  std::vector<std::pair<int, int>> bundles;
  for (int g = 0; g < m; g++) {
    if (pairing[g] == (g + 1) % m) {
      int t = 1;
      while (t < m / 2 && pairing[((g - t) % m + m) % m] == (g + 1 + t) % m) t++;
      bundles.push_back({g, t});
    }
  }
  if (bundles.size() != 3) return std::nullopt;
  int total = 0;
  std::vector<char> covered(m, 0);
  for (auto [g, s] : bundles) {
    total += s;
    for (int t = 0; t < s; t++) {
      covered[((g - t) % m + m) % m]++;
      covered[(g + 1 + t) % m]++;
    }
  }
  if (2 * total != m) return std::nullopt;
  for (int i = 0; i < m; i++)
    if (covered[i] != 1) return std::nullopt;
  return bundles;
}

std::optional<TypeABC> is_type_abc(const LinkPattern& p) {
  auto bundles = detect_bundles(p.pair);
  if (!bundles) return std::nullopt;
  int n = p.n;
  // gap g sits between occupied indices g and g+1: the unoccupied perimeter
  // position there is position_of(g) + 1.
  std::array<int, 3> pos;
  std::array<int, 3> size;
  for (int k = 0; k < 3; k++) {
    pos[k] = (p.position_of((*bundles)[k].first) + 1) % (4 * n);
    size[k] = (*bundles)[k].second;
  }
  ArchGeometry geo = classify(n, pos[0], pos[1], pos[2]);
  TypeABC t{geo.A, geo.B, geo.C, geo.a, geo.b, geo.c};
  // cross-check: the detected size of each labeled bundle matches classify
  for (int k = 0; k < 3; k++) {
    int want = pos[k] == geo.A ? geo.a : pos[k] == geo.B ? geo.b : geo.c;
    if (size[k] != want)
      throw Error(ErrorKind::structure, "bundle size mismatch vs classify");
  }
  return t;
}

namespace {

void enumerate_rec(FplGrid& g, int x, int y, std::vector<FplGrid>& out) {
  int n = g.n();
  if (y == n) {
    out.push_back(g);
    return;
  }
  int nx = x + 1 < n ? x + 1 : 0;
  int ny = x + 1 < n ? y : y + 1;
  int occ = (g.get(g.incident(x, y, kDown)) == EdgeState::Occupied) +
            (g.get(g.incident(x, y, kLeft)) == EdgeState::Occupied);
  int rid = g.incident(x, y, kRight), uid = g.incident(x, y, kUp);
  EdgeState r0 = g.get(rid), u0 = g.get(uid);
  for (int rv = 0; rv < 2; rv++) {
    if (r0 != EdgeState::Undetermined && (r0 == EdgeState::Occupied) != bool(rv))
      continue;
    for (int uv = 0; uv < 2; uv++) {
      if (occ + rv + uv != 2) continue;
      if (u0 != EdgeState::Undetermined &&
          (u0 == EdgeState::Occupied) != bool(uv))
        continue;
      g.set(rid, rv ? EdgeState::Occupied : EdgeState::Empty);
      g.set(uid, uv ? EdgeState::Occupied : EdgeState::Empty);
      enumerate_rec(g, nx, ny, out);
      g.set(rid, r0);
      g.set(uid, u0);
    }
  }
}

void check_bound(int n, int bound) {
  if (n < 1) throw Error(ErrorKind::invalid_grid, "n must be >= 1");
  if (n > bound)
    throw Error(ErrorKind::bound_exceeded,
                "n=" + std::to_string(n) + " above oracle bound " +
                    std::to_string(bound));
}

}  // namespace

std::vector<FplGrid> enumerate_all_fpl(int n, int parity, int bound) {
  check_bound(n, bound);
  FplGrid g = boundary(n, parity);
  std::vector<FplGrid> out;
  enumerate_rec(g, 0, 0, out);
  return out;
}

std::vector<FplGrid> enumerate_all_fpl_parallel(int n, int parity, int bound) {
  check_bound(n, bound);
  // expand the first two rows serially into prefixes, then finish each prefix
  // independently; concatenation in prefix order reproduces the serial order
  int rows = n >= 3 ? 2 : 1;
  std::vector<FplGrid> prefixes;
  {
    FplGrid g = boundary(n, parity);
    struct Walker {
      int n, stop;
      std::vector<FplGrid>* out;
      void rec(FplGrid& g, int x, int y) {
        if (y == stop) {
          out->push_back(g);
          return;
        }
        int nx = x + 1 < n ? x + 1 : 0;
        int ny = x + 1 < n ? y : y + 1;
        int occ = (g.get(g.incident(x, y, kDown)) == EdgeState::Occupied) +
                  (g.get(g.incident(x, y, kLeft)) == EdgeState::Occupied);
        int rid = g.incident(x, y, kRight), uid = g.incident(x, y, kUp);
        EdgeState r0 = g.get(rid), u0 = g.get(uid);
        for (int rv = 0; rv < 2; rv++) {
          if (r0 != EdgeState::Undetermined &&
              (r0 == EdgeState::Occupied) != bool(rv))
            continue;
          for (int uv = 0; uv < 2; uv++) {
            if (occ + rv + uv != 2) continue;
            if (u0 != EdgeState::Undetermined &&
                (u0 == EdgeState::Occupied) != bool(uv))
              continue;
            g.set(rid, rv ? EdgeState::Occupied : EdgeState::Empty);
            g.set(uid, uv ? EdgeState::Occupied : EdgeState::Empty);
            rec(g, nx, ny);
            g.set(rid, r0);
            g.set(uid, u0);
          }
        }
      }
    } w{n, rows, &prefixes};
    w.rec(g, 0, 0);
  }
  std::vector<std::vector<FplGrid>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(prefixes.size()); i++) {
    enumerate_rec(prefixes[i], 0, rows, parts[i]);
  }
  std::vector<FplGrid> out;
  for (auto& part : parts)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

// Second oracle: assigns internal edges in edge-id order with degree
// feasibility pruning; intentionally a different strategy and code path.
struct EdgeOracle {
  int n;
  FplGrid g;
  std::vector<FplGrid>* out;

  bool vertex_ok(int x, int y) {
    int occ = g.occupied_degree(x, y), und = g.undetermined_degree(x, y);
    return occ <= 2 && occ + und >= 2;
  }

  bool edge_ok(int e) {
    EdgeRef r = g.ref(e);
    if (r.kind == 'H')
      return vertex_ok(r.i, r.j) && vertex_ok(r.i + 1, r.j);
    return vertex_ok(r.i, r.j) && vertex_ok(r.i, r.j + 1);
  }

  void rec(int e) {
    int ne = g.internal_edge_count();
    if (e == ne) {
      for (int y = 0; y < n; y++)
        for (int x = 0; x < n; x++)
          if (g.occupied_degree(x, y) != 2) return;
      out->push_back(g);
      return;
    }
    for (EdgeState v : {EdgeState::Empty, EdgeState::Occupied}) {
      g.set(e, v);
      if (edge_ok(e)) rec(e + 1);
    }
    g.set(e, EdgeState::Undetermined);
  }
};

}  // namespace

std::vector<FplGrid> enumerate_all_fpl_ref(int n, int parity, int bound) {
  check_bound(n, bound);
  std::vector<FplGrid> out;
  EdgeOracle o{n, boundary(n, parity), &out};
  o.rec(0);
  return out;
}

std::pair<int, int> apply_vertex(const Transform& t, int n, int x, int y) {
  if (t.swap) std::swap(x, y);
  if (t.negx) x = n - 1 - x;
  if (t.negy) y = n - 1 - y;
  return {x, y};
}

int apply_dir(const Transform& t, int dir) {
  int dx = kDx[dir], dy = kDy[dir];
  if (t.swap) std::swap(dx, dy);
  if (t.negx) dx = -dx;
  if (t.negy) dy = -dy;
  for (int s = 0; s < 4; s++)
    if (kDx[s] == dx && kDy[s] == dy) return s;
  throw Error(ErrorKind::structure, "bad direction");
}

const std::vector<Transform>& all_transforms() {
  static const std::vector<Transform> all = [] {
    std::vector<Transform> v;
    for (int s = 0; s < 2; s++)
      for (int a = 0; a < 2; a++)
        for (int b = 0; b < 2; b++)
          v.push_back({bool(s), bool(a), bool(b)});
    return v;
  }();
  return all;
}

Transform compose(const Transform& after, const Transform& before) {
  // determine flags from the images of the axis directions
  int rx = apply_dir(after, apply_dir(before, kRight));
  int ru = apply_dir(after, apply_dir(before, kUp));
  Transform t;
  t.swap = (rx == kUp || rx == kDown);
  t.negx = t.swap ? (ru == kLeft) : (rx == kLeft);
  t.negy = t.swap ? (rx == kDown) : (ru == kDown);
  return t;
}

Transform inverse(const Transform& t) {
  for (const Transform& u : all_transforms())
    if (compose(u, t) == kIdentity) return u;
  throw Error(ErrorKind::structure, "no inverse");
}

int transform_position(const Transform& t, int n, int p) {
  FplGrid probe(n);
  int x, y, dir;
  probe.stub_vertex(p, x, y, dir);
  auto [nx, ny] = apply_vertex(t, n, x, y);
  int nd = apply_dir(t, dir);
  switch (nd) {
    case kDown: return nx;
    case kRight: return n + ny;
    case kUp: return 3 * n - 1 - nx;
    case kLeft: return 4 * n - 1 - ny;
  }
  throw Error(ErrorKind::structure, "bad stub direction");
}

int transform_edge(const Transform& t, const FplGrid& g, int id) {
  int n = g.n();
  EdgeRef r = g.ref(id);
  if (r.kind == 'X') return g.xid(transform_position(t, n, r.i));
  int x2 = r.kind == 'H' ? r.i + 1 : r.i;
  int y2 = r.kind == 'H' ? r.j : r.j + 1;
  auto [ax, ay] = apply_vertex(t, n, r.i, r.j);
  auto [bx, by] = apply_vertex(t, n, x2, y2);
  if (ax > bx || ay > by) {
    std::swap(ax, bx);
    std::swap(ay, by);
  }
  return ay == by ? g.hid(ax, ay) : g.vid(ax, ay);
}

FplGrid transform_grid(const Transform& t, const FplGrid& g) {
  FplGrid out(g.n());
  for (int e = 0; e < g.edge_count(); e++)
    out.set(transform_edge(t, g, e), g.get(e));
  return out;
}

}  // namespace fpl

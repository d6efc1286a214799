#include "fpl/render.hpp"

#include <algorithm>
#include <sstream>

namespace fpl {

namespace {

struct Canvas {
  std::vector<std::string> rows;

  void put(int r, int c, char ch) {
    if (r >= static_cast<int>(rows.size())) rows.resize(r + 1);
    if (c >= static_cast<int>(rows[r].size())) rows[r].resize(c + 1, ' ');
    rows[r][c] = ch;
  }
  std::string str() const {
    std::string out;
    for (std::string line : rows) {
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }
};

constexpr int kU = 40;  // svg grid unit
constexpr int kM = 40;  // svg margin

std::string svg_open(int w, int h) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  return os.str();
}

void svg_line(std::string& out, int x1, int y1, int x2, int y2,
              const char* style) {
  std::ostringstream os;
  os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
     << "\" y2=\"" << y2 << "\" " << style << "/>\n";
  out += os.str();
}

constexpr const char* kOccStyle = "stroke=\"#000\" stroke-width=\"4\"";
constexpr const char* kUndStyle =
    "stroke=\"#b00\" stroke-width=\"2\" stroke-dasharray=\"4 3\"";
constexpr const char* kEmpStyle = "stroke=\"#ddd\" stroke-width=\"1\"";

}  // namespace

std::string render_grid_ascii(const FplGrid& g) {
  int n = g.n();
  Canvas cv;
  auto col = [&](int x) { return 2 + 4 * x; };
  auto row = [&](int y) { return 1 + 2 * (n - 1 - y); };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) cv.put(row(y), col(x), 'o');
  for (int y = 0; y < n; ++y)
    for (int x = 0; x + 1 < n; ++x) {
      EdgeState s = g.get(g.hid(x, y));
      if (s == EdgeState::Occupied)
        for (int k = 1; k <= 3; ++k) cv.put(row(y), col(x) + k, '-');
      else if (s == EdgeState::Undetermined)
        cv.put(row(y), col(x) + 2, '?');
    }
  for (int y = 0; y + 1 < n; ++y)
    for (int x = 0; x < n; ++x) {
      EdgeState s = g.get(g.vid(x, y));
      if (s == EdgeState::Occupied) cv.put(row(y) - 1, col(x), '|');
      else if (s == EdgeState::Undetermined) cv.put(row(y) - 1, col(x), '?');
    }
  for (int p = 0; p < 4 * n; ++p) {
    EdgeState s = g.get(g.xid(p));
    if (s == EdgeState::Empty) continue;
    int x, y, d;
    g.stub_vertex(p, x, y, d);
    char occ_ch = (d == kLeft || d == kRight) ? '-' : '|';
    char ch = s == EdgeState::Occupied ? occ_ch : '?';
    int r = row(y) - (d == kUp ? 1 : 0) + (d == kDown ? 1 : 0);
    int c = col(x) - (d == kLeft ? 1 : 0) + (d == kRight ? 1 : 0);
    cv.put(r, c, ch);
  }
  return cv.str();
}

std::string render_grid_svg(const FplGrid& g) {
  int n = g.n();
  auto px = [&](int x) { return kM + kU * x; };
  auto py = [&](int y) { return kM + kU * (n - 1 - y); };
  std::string body;
  auto style_of = [&](EdgeState s) {
    return s == EdgeState::Occupied
               ? kOccStyle
               : (s == EdgeState::Undetermined ? kUndStyle : kEmpStyle);
  };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x + 1 < n; ++x)
      svg_line(body, px(x), py(y), px(x + 1), py(y),
               style_of(g.get(g.hid(x, y))));
  for (int y = 0; y + 1 < n; ++y)
    for (int x = 0; x < n; ++x)
      svg_line(body, px(x), py(y), px(x), py(y + 1),
               style_of(g.get(g.vid(x, y))));
  for (int p = 0; p < 4 * n; ++p) {
    int x, y, d;
    g.stub_vertex(p, x, y, d);
    svg_line(body, px(x), py(y), px(x) + kDx[d] * (kU / 2),
             py(y) - kDy[d] * (kU / 2), style_of(g.get(g.xid(p))));
  }
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      std::ostringstream os;
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y)
         << "\" r=\"4\" fill=\"#000\"/>\n";
      body += os.str();
    }
  int side = 2 * kM + kU * (n - 1);
  return svg_open(side, side) + body + "</svg>\n";
}

std::string render_dominos_ascii(const ActiveRegion& region) {
  int n = region.geo.n;
  Canvas cv;
  for (int cy = n - 2; cy >= 0; --cy)
    for (int cx = 0; cx + 1 < n; ++cx) cv.put(n - 2 - cy, cx, '.');
  for (size_t k = 0; k < region.dominos.size(); ++k) {
    const Domino& dm = region.dominos[k];
    char ch = static_cast<char>('a' + k % 26);
    cv.put(n - 2 - dm.cy0, dm.cx0, ch);
    cv.put(n - 2 - dm.cy1, dm.cx1, ch);
  }
  std::string out = cv.str();
  for (size_t k = 0; k < region.dominos.size(); ++k) {
    const Domino& dm = region.dominos[k];
    std::ostringstream os;
    os << static_cast<char>('a' + k % 26) << ": cells (" << dm.cx0 << ','
       << dm.cy0 << ")+(" << dm.cx1 << ',' << dm.cy1 << ") face ("
       << dm.face.first << ',' << dm.face.second << ")\n";
    out += os.str();
  }
  return out;
}

std::string render_dominos_svg(const ActiveRegion& region) {
  int n = region.geo.n;
  std::string body;
  {
    std::string grid = render_grid_svg(region.fixed);
    size_t a = grid.find('\n'), b = grid.rfind("</svg>");
    body = grid.substr(a + 1, b - a - 1);
  }
  for (const Domino& dm : region.dominos) {
    bool vertical = dm.cx0 == dm.cx1;
    int w = vertical ? kU : 2 * kU;
    int h = vertical ? 2 * kU : kU;
    int x = kM + kU * dm.cx0;
    int ytop = std::max(dm.cy0, dm.cy1) + 1;
    int y = kM + kU * (n - 1 - ytop);
    std::ostringstream os;
    os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
       << "\" height=\"" << h
       << "\" fill=\"none\" stroke=\"#06c\" stroke-width=\"3\"/>\n"
       << "<text x=\"" << x + w / 2 << "\" y=\"" << y + h / 2
       << "\" font-size=\"12\" text-anchor=\"middle\">(" << dm.face.first
       << ',' << dm.face.second << ")</text>\n";
    body += os.str();
  }
  int side = 2 * kM + kU * (n - 1);
  return svg_open(side, side) + body + "</svg>\n";
}

namespace {

constexpr int kS = 20, kT = 36;  // triangular-lattice projection units

std::pair<int, int> proj(int i, int j) { return {kS * (2 * i + j), -kT * j}; }

// Lozenge letter for a matched pair of triangles.
char lozenge_type(const TriRef& up, const TriRef& dn) {
  if (dn.i == up.i - 1 && dn.j == up.j) return 'z';
  if (dn.i == up.i && dn.j == up.j - 1) return 'x';
  return 'y';
}

std::array<std::pair<int, int>, 3> tri_corner_pts(const TriRef& t) {
  if (t.up)
    return {std::pair{t.i, t.j}, {t.i + 1, t.j}, {t.i, t.j + 1}};
  return {std::pair{t.i + 1, t.j}, {t.i, t.j + 1}, {t.i + 1, t.j + 1}};
}

}  // namespace

std::string render_hexagon_ascii(const DimerConfig& d) {
  HoneycombRegion hex = honeycomb_region(d.a, d.b, d.c);
  std::vector<char> type(hex.tris.size(), '?');
  for (int e : d.edges) {
    auto [t0, t1] = hex.edges[e];
    const TriRef &a = hex.tris[t0], &b = hex.tris[t1];
    const TriRef& up = a.up ? a : b;
    const TriRef& dn = a.up ? b : a;
    type[t0] = type[t1] = lozenge_type(up, dn);
  }
  int minc = 0, maxj = 0;
  for (const TriRef& t : hex.tris) {
    minc = std::min(minc, 2 * t.i + t.j + (t.up ? 0 : 1));
    maxj = std::max(maxj, t.j);
  }
  Canvas cv;
  for (size_t k = 0; k < hex.tris.size(); ++k) {
    const TriRef& t = hex.tris[k];
    int r = maxj - t.j;
    int c = 2 * t.i + t.j + (t.up ? 0 : 1) - minc;
    cv.put(r, c, type[k]);
  }
  return cv.str();
}

std::string render_hexagon_svg(const DimerConfig& d) {
  HoneycombRegion hex = honeycomb_region(d.a, d.b, d.c);
  int a = d.a, b = d.b, c = d.c;
  std::vector<std::pair<int, int>> corners{{a, 0},     {a - b, b}, {-b, b},
                                           {-b, b - c}, {0, -c},   {a, -c}};
  int minx = 1 << 30, miny = 1 << 30, maxx = -(1 << 30), maxy = -(1 << 30);
  for (auto [i, j] : corners) {
    auto [x, y] = proj(i, j);
    minx = std::min(minx, x);
    miny = std::min(miny, y);
    maxx = std::max(maxx, x);
    maxy = std::max(maxy, y);
  }
  auto P = [&](int i, int j) {
    auto [x, y] = proj(i, j);
    return std::pair{x - minx + kM, y - miny + kM};
  };
  std::string body;
  for (int e : d.edges) {
    auto [t0, t1] = hex.edges[e];
    const TriRef &ta = hex.tris[t0], &tb = hex.tris[t1];
    const TriRef& up = ta.up ? ta : tb;
    const TriRef& dn = ta.up ? tb : ta;
    // Quad = free corner of up, shared endpoint, free corner of down, other
    // shared endpoint.
    auto cu = tri_corner_pts(up), cd = tri_corner_pts(dn);
    std::vector<std::pair<int, int>> shared, fu, fd;
    for (auto p : cu)
      (std::find(cd.begin(), cd.end(), p) != cd.end() ? shared : fu)
          .push_back(p);
    for (auto p : cd)
      if (std::find(cu.begin(), cu.end(), p) == cu.end()) fd.push_back(p);
    char ty = lozenge_type(up, dn);
    const char* fill = ty == 'z' ? "#b7c8e8" : ty == 'x' ? "#e8c8b7" : "#bfe0bb";
    std::array<std::pair<int, int>, 4> quad{fu[0], shared[0], fd[0], shared[1]};
    std::ostringstream os;
    os << "<polygon points=\"";
    for (auto [i, j] : quad) {
      auto [x, y] = P(i, j);
      os << x << ',' << y << ' ';
    }
    os << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"2\"/>\n";
    body += os.str();
  }
  {
    std::ostringstream os;
    os << "<polygon points=\"";
    for (auto [i, j] : corners) {
      auto [x, y] = P(i, j);
      os << x << ',' << y << ' ';
    }
    os << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"3\"/>\n";
    body += os.str();
  }
  return svg_open(maxx - minx + 2 * kM, maxy - miny + 2 * kM) + body +
         "</svg>\n";
}

std::string render_pp_ascii(const PlanePartition& pp) {
  if (pp.a == 0 || pp.b == 0) return "(empty)\n";
  int width = 1;
  for (int v = pp.c; v >= 10; v /= 10) ++width;
  std::string out;
  for (int i = 0; i < pp.a; ++i) {
    std::string line;
    for (int j = 0; j < pp.b; ++j) {
      std::string s = std::to_string(pp.rows[i][j]);
      if (j) line += ' ';
      line += std::string(width - s.size(), ' ') + s;
    }
    out += line + "\n";
  }
  return out;
}

std::string render_pp_svg(const PlanePartition& pp) {
  std::string body;
  for (int i = 0; i < pp.a; ++i)
    for (int j = 0; j < pp.b; ++j) {
      int v = pp.rows[i][j];
      int shade = 255 - (pp.c > 0 ? v * 160 / pp.c : 0);
      int x = kM + kU * j, y = kM + kU * i;
      std::ostringstream os;
      os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kU
         << "\" height=\"" << kU << "\" fill=\"rgb(" << shade << ',' << shade
         << ',' << shade << ")\" stroke=\"#000\"/>\n"
         << "<text x=\"" << x + kU / 2 << "\" y=\"" << y + kU / 2 + 5
         << "\" font-size=\"16\" text-anchor=\"middle\">" << v << "</text>\n";
      body += os.str();
    }
  return svg_open(2 * kM + kU * std::max(pp.b, 1),
                  2 * kM + kU * std::max(pp.a, 1)) +
         body + "</svg>\n";
}

std::string render_hfpl_ascii(const HfplConfig& h) {
  std::ostringstream os;
  os << "hfpl " << h.a << ' ' << h.b << ' ' << h.c << "\n";
  os << "stub pairs:";
  for (size_t s = 0; s < h.stub_pair.size(); ++s)
    if (static_cast<int>(s) < h.stub_pair[s])
      os << " (" << s << ',' << h.stub_pair[s] << ')';
  os << "\npaths: " << h.paths.size() << "\n";
  for (size_t k = 0; k < h.paths.size(); ++k)
    os << "  " << k << ": " << h.paths[k].size() << " triangles\n";
  os << "loops: " << h.loops.size() << "\n";
  for (size_t k = 0; k < h.loops.size(); ++k)
    os << "  " << k << ": " << h.loops[k].size() << " triangles\n";
  return os.str();
}

std::string render_hfpl_svg(const HfplConfig& h) {
  HoneycombRegion hex = honeycomb_region(h.a, h.b, h.c);
  int minx = 1 << 30, miny = 1 << 30, maxx = -(1 << 30), maxy = -(1 << 30);
  for (const TriRef& t : hex.tris)
    for (auto [i, j] : tri_corner_pts(t)) {
      auto [x, y] = proj(i, j);
      minx = std::min(minx, x);
      miny = std::min(miny, y);
      maxx = std::max(maxx, x);
      maxy = std::max(maxy, y);
    }
  auto centroid = [&](const TriRef& t) {
    int sx = 0, sy = 0;
    for (auto [i, j] : tri_corner_pts(t)) {
      auto [x, y] = proj(i, j);
      sx += x;
      sy += y;
    }
    return std::pair{sx / 3 - minx + kM, sy / 3 - miny + kM};
  };
  std::string body;
  for (const TriRef& t : hex.tris) {
    std::ostringstream os;
    os << "<polygon points=\"";
    for (auto [i, j] : tri_corner_pts(t)) {
      auto [x, y] = proj(i, j);
      os << x - minx + kM << ',' << y - miny + kM << ' ';
    }
    os << "\" fill=\"none\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
    body += os.str();
  }
  for (int e : h.comp_edges) {
    auto [t0, t1] = hex.edges[e];
    auto [x1, y1] = centroid(hex.tris[t0]);
    auto [x2, y2] = centroid(hex.tris[t1]);
    svg_line(body, x1, y1, x2, y2, kOccStyle);
  }
  for (size_t s = 0; s < hex.stubs.size(); ++s) {
    auto [ti, ghost] = hex.stubs[s];
    auto [x1, y1] = centroid(hex.tris[ti]);
    auto [x2, y2] = centroid(ghost);
    svg_line(body, x1, y1, x2, y2,
             "stroke=\"#06c\" stroke-width=\"2\" stroke-dasharray=\"5 3\"");
  }
  return svg_open(maxx - minx + 2 * kM, maxy - miny + 2 * kM) + body +
         "</svg>\n";
}

}  // namespace fpl

#include "fpl/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace fpl {

using nlohmann::json;

std::string grid_to_json(const FplGrid& g) {
  if (!g.complete())
    throw Error(ErrorKind::invalid_grid, "cannot serialize a partial grid");
  std::vector<EdgeRef> occ;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.get(e) == EdgeState::Occupied) occ.push_back(g.ref(e));
  std::sort(occ.begin(), occ.end());
  json arr = json::array();
  for (const EdgeRef& r : occ)
    arr.push_back(json::array({std::string(1, r.kind), r.i, r.j}));
  json out;
  out["n"] = g.n();
  out["occupied"] = std::move(arr);
  return out.dump();
}

FplGrid grid_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!in.is_object() || !in.contains("n") || !in.contains("occupied") ||
      !in["n"].is_number_integer() || !in["occupied"].is_array())
    throw Error(ErrorKind::parse, "expected {\"n\", \"occupied\"}");
  int n = in["n"].get<int>();
  if (n < 1) throw Error(ErrorKind::parse, "n must be positive");
  FplGrid g(n);
  for (int e = 0; e < g.edge_count(); ++e) g.set(e, EdgeState::Empty);
  for (const json& item : in["occupied"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_string() ||
        !item[1].is_number_integer() || !item[2].is_number_integer())
      throw Error(ErrorKind::parse, "edge entries are [kind, i, j]");
    std::string kind = item[0].get<std::string>();
    if (kind.size() != 1 ||
        (kind[0] != 'H' && kind[0] != 'V' && kind[0] != 'X'))
      throw Error(ErrorKind::parse, "edge kind must be H, V or X");
    EdgeRef r{kind[0], item[1].get<int>(), item[2].get<int>()};
    bool ok = true;
    if (r.kind == 'H')
      ok = r.i >= 0 && r.i < n - 1 && r.j >= 0 && r.j < n;
    else if (r.kind == 'V')
      ok = r.i >= 0 && r.i < n && r.j >= 0 && r.j < n - 1;
    else
      ok = r.i >= 0 && r.i < 4 * n && r.j == 0;
    if (!ok) throw Error(ErrorKind::parse, "edge out of range");
    int id = g.id(r);
    if (g.get(id) == EdgeState::Occupied)
      throw Error(ErrorKind::parse, "duplicate edge");
    g.set(id, EdgeState::Occupied);
  }
  return g;
}

std::string pp_to_json(const PlanePartition& pp) {
  pp.validate();
  json out;
  out["a"] = pp.a;
  out["b"] = pp.b;
  out["c"] = pp.c;
  out["rows"] = pp.rows;
  return out.dump();
}

PlanePartition pp_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  for (const char* key : {"a", "b", "c"})
    if (!in.is_object() || !in.contains(key) ||
        !in[key].is_number_integer())
      throw Error(ErrorKind::parse, "expected {\"a\",\"b\",\"c\",\"rows\"}");
  if (!in.contains("rows") || !in["rows"].is_array())
    throw Error(ErrorKind::parse, "expected {\"a\",\"b\",\"c\",\"rows\"}");
  PlanePartition pp;
  pp.a = in["a"].get<int>();
  pp.b = in["b"].get<int>();
  pp.c = in["c"].get<int>();
  for (const json& row : in["rows"]) {
    if (!row.is_array()) throw Error(ErrorKind::parse, "rows must be arrays");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer())
        throw Error(ErrorKind::parse, "heights must be integers");
      r.push_back(v.get<int>());
    }
    pp.rows.push_back(std::move(r));
  }
  pp.validate();
  return pp;
}

}  // namespace fpl

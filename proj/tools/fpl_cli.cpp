#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpl/dynamics.hpp"
#include "fpl/json_io.hpp"
#include "fpl/render.hpp"
#include "fpl/verify.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using fpl::Error;
using fpl::ErrorKind;
using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + path);
  out << text;
}

// {"n": N, "centers": [p0,p1,p2]}
fpl::ArchGeometry geometry_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
  if (!in.is_object() || !in.contains("n") || !in.contains("centers") ||
      !in["n"].is_number_integer() || !in["centers"].is_array() ||
      in["centers"].size() != 3)
    throw Error(ErrorKind::parse, "expected {\"n\", \"centers\":[p0,p1,p2]}");
  for (const json& v : in["centers"])
    if (!v.is_number_integer())
      throw Error(ErrorKind::parse, "centers must be integers");
  return fpl::classify(in["n"].get<int>(), in["centers"][0].get<int>(),
                       in["centers"][1].get<int>(),
                       in["centers"][2].get<int>());
}

struct Report {
  json doc;
  std::chrono::steady_clock::time_point t0 =
      std::chrono::steady_clock::now();

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["parameters"] = json::object();
    doc["counts"] = json::object();
    doc["checks"] = json::array();
  }
  void flush(const std::string& path) {
    doc["timings_ms"]["total"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count();
    if (!path.empty()) spill(path, doc.dump(2) + "\n");
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fully packed loops of type (A,B,C) <-> boxed plane partitions"};
  app.require_subcommand(1);

  std::string json_out;
  int parallel = 0;
  int oracle_bound = 6;
  app.add_option("--json-out", json_out, "write a machine-readable run report");
  app.add_option("--parallel", parallel,
                 "worker threads for the parallel kernels (0 = library default)");
  app.add_option("--oracle-bound", oracle_bound,
                 "size cap for exhaustive sweeps (default 6)");

  auto* cmd_count = app.add_subcommand(
      "count", "number of plane partitions in an a x b x c box");
  int ca = 0, cb = 0, cc = 0;
  bool qflag = false;
  cmd_count->add_option("a", ca, "box side a")->required();
  cmd_count->add_option("b", cb, "box side b")->required();
  cmd_count->add_option("c", cc, "box side c")->required();
  cmd_count->add_flag("--q", qflag, "print the q-polynomial instead");

  auto* cmd_verify = app.add_subcommand(
      "verify", "run the acceptance battery over all placements up to n");
  int nmax = 0;
  cmd_verify->add_option("n", nmax, "maximum a+b+c to sweep")->required();

  auto* cmd_enum = app.add_subcommand(
      "enumerate", "enumerate configurations (all, or one type's closure)");
  int en = 0, eparity = 0;
  std::vector<int> ecenters;
  std::string eout;
  cmd_enum->add_option("n", en, "grid size")->required();
  cmd_enum->add_option("--parity", eparity, "occupied boundary class (0/1)");
  cmd_enum->add_option("--centers", ecenters,
                       "three unoccupied positions; restricts to that type")
      ->expected(3);
  cmd_enum->add_option("--out", eout, "write one configuration JSON per line");

  auto* cmd_biject = app.add_subcommand(
      "biject", "apply the bijection in either direction");
  std::string direction, bin;
  int bn = 0;
  std::vector<int> bcenters;
  bool round_trip = false;
  cmd_biject
      ->add_option("direction", direction, "fpl2pp or pp2fpl")
      ->required()
      ->check(CLI::IsMember({"fpl2pp", "pp2fpl"}));
  cmd_biject->add_option("--in", bin, "input JSON file")->required();
  cmd_biject->add_option("--n", bn, "grid size (pp2fpl)");
  cmd_biject->add_option("--centers", bcenters, "positions (pp2fpl)")
      ->expected(3);
  cmd_biject->add_flag("--round-trip", round_trip,
                       "re-apply the inverse and compare");

  auto* cmd_render = app.add_subcommand("render", "draw a layer");
  std::string layer, format = "ascii", rin, rout;
  cmd_render->add_option("--layer", layer, "fpl|fixed|dominos|hexagon|pp|hfpl")
      ->required()
      ->check(CLI::IsMember({"fpl", "fixed", "dominos", "hexagon", "pp",
                             "hfpl"}));
  cmd_render->add_option("--format", format, "ascii|svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--in", rin, "input JSON file")->required();
  cmd_render->add_option("--out", rout, "output file (default stdout)");

  auto* cmd_gyrate = app.add_subcommand("gyrate", "apply gyration steps");
  std::string gin;
  int steps = 1;
  cmd_gyrate->add_option("--in", gin, "input configuration JSON")->required();
  cmd_gyrate->add_option("--steps", steps, "number of steps (default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (parallel > 0) omp_set_num_threads(parallel);
#endif
  bool use_parallel = parallel > 1;

  try {
    if (*cmd_count) {
      Report rep("count");
      rep.doc["parameters"] = {{"a", ca}, {"b", cb}, {"c", cc}, {"q", qflag}};
      if (ca < 0 || cb < 0 || cc < 0)
        throw Error(ErrorKind::parse, "box sides must be non-negative");
      if (qflag) {
        fpl::QPolynomial p = fpl::macdonald_q(ca, cb, cc);
        std::cout << p.str() << "\n";
        rep.doc["counts"]["at_one"] = p.at_one().str();
        rep.doc["counts"]["degree"] = p.degree();
      } else {
        fpl::BigInt v = fpl::macmahon(ca, cb, cc);
        std::cout << v.str() << "\n";
        rep.doc["counts"]["value"] = v.str();
      }
      rep.flush(json_out);
      return 0;
    }

    if (*cmd_verify) {
      Report rep("verify");
      rep.doc["parameters"] = {{"n", nmax}, {"oracle_bound", oracle_bound}};
      std::vector<fpl::CheckResult> rs;
      try {
        rs = fpl::acceptance_battery(nmax, oracle_bound);
      } catch (const Error& e) {
        if (e.kind == ErrorKind::bound_exceeded) {
          std::cerr << "usage error: " << e.what() << "\n";
          return 2;
        }
        throw;
      }
      bool all = true;
      for (size_t i = 0; i < rs.size(); ++i) {
        all = all && rs[i].pass;
        std::cout << "criterion " << i + 1 << " (" << rs[i].name
                  << "): " << (rs[i].pass ? "PASS" : "FAIL") << " - "
                  << rs[i].detail << "\n";
        rep.doc["checks"].push_back(
            {{"name", rs[i].name}, {"pass", rs[i].pass},
             {"detail", rs[i].detail}});
      }
      rep.flush(json_out);
      return all ? 0 : 1;
    }

    if (*cmd_enum) {
      Report rep("enumerate");
      rep.doc["parameters"] = {{"n", en}, {"parity", eparity}};
      std::vector<fpl::FplGrid> items;
      if (ecenters.empty()) {
        items = use_parallel
                    ? fpl::enumerate_all_fpl_parallel(en, eparity, oracle_bound)
                    : fpl::enumerate_all_fpl(en, eparity, oracle_bound);
      } else {
        rep.doc["parameters"]["centers"] = ecenters;
        fpl::ArchGeometry geo =
            fpl::classify(en, ecenters[0], ecenters[1], ecenters[2]);
        fpl::ActiveRegion region =
            fpl::active_region(geo, fpl::fixed_edges(geo));
        items = use_parallel ? fpl::flip_closure_parallel(region, oracle_bound)
                             : fpl::flip_closure(region, oracle_bound);
      }
      std::cout << items.size() << "\n";
      rep.doc["counts"]["configurations"] = items.size();
      if (!eout.empty()) {
        std::string lines;
        for (const fpl::FplGrid& g : items) lines += fpl::grid_to_json(g) + "\n";
        spill(eout, lines);
      }
      rep.flush(json_out);
      return 0;
    }

    if (*cmd_biject) {
      Report rep("biject");
      rep.doc["parameters"] = {{"direction", direction}, {"in", bin}};
      if (direction == "fpl2pp") {
        fpl::FplGrid g = fpl::grid_from_json(slurp(bin));
        fpl::validate_complete(g);
        auto t = fpl::is_type_abc(fpl::link_pattern(g));
        if (!t)
          throw Error(ErrorKind::invalid_grid,
                      "configuration has no (A,B,C) type");
        fpl::ArchGeometry geo = fpl::classify(g.n(), t->A, t->B, t->C);
        fpl::ActiveRegion region =
            fpl::active_region(geo, fpl::fixed_edges(geo));
        fpl::PlanePartition pp = fpl::fpl_to_pp(g, region);
        std::cout << fpl::pp_to_json(pp) << "\n";
        if (round_trip) {
          bool ok = fpl::pp_to_fpl(pp, region) == g;
          rep.doc["checks"].push_back({{"name", "round-trip"}, {"pass", ok}});
          rep.flush(json_out);
          if (!ok) {
            std::cerr << "round-trip mismatch\n";
            return 1;
          }
          std::cerr << "round-trip ok\n";
          return 0;
        }
      } else {
        if (bn == 0 || bcenters.size() != 3)
          throw Error(ErrorKind::parse,
                      "pp2fpl needs --n and --centers p0 p1 p2");
        fpl::PlanePartition pp = fpl::pp_from_json(slurp(bin));
        fpl::ArchGeometry geo =
            fpl::classify(bn, bcenters[0], bcenters[1], bcenters[2]);
        fpl::ActiveRegion region =
            fpl::active_region(geo, fpl::fixed_edges(geo));
        fpl::FplGrid g = fpl::pp_to_fpl(pp, region);
        std::cout << fpl::grid_to_json(g) << "\n";
        if (round_trip) {
          bool ok = fpl::fpl_to_pp(g, region) == pp;
          rep.doc["checks"].push_back({{"name", "round-trip"}, {"pass", ok}});
          rep.flush(json_out);
          if (!ok) {
            std::cerr << "round-trip mismatch\n";
            return 1;
          }
          std::cerr << "round-trip ok\n";
          return 0;
        }
      }
      rep.flush(json_out);
      return 0;
    }

    if (*cmd_render) {
      Report rep("render");
      rep.doc["parameters"] = {{"layer", layer}, {"format", format}};
      std::string text = slurp(rin);
      bool svg = format == "svg";
      std::string art;
      if (layer == "fpl") {
        fpl::FplGrid g = fpl::grid_from_json(text);
        art = svg ? fpl::render_grid_svg(g) : fpl::render_grid_ascii(g);
      } else if (layer == "fixed") {
        fpl::FplGrid fx = fpl::fixed_edges(geometry_from_json(text));
        art = svg ? fpl::render_grid_svg(fx) : fpl::render_grid_ascii(fx);
      } else if (layer == "dominos") {
        fpl::ArchGeometry geo = geometry_from_json(text);
        fpl::ActiveRegion region =
            fpl::active_region(geo, fpl::fixed_edges(geo));
        art = svg ? fpl::render_dominos_svg(region)
                  : fpl::render_dominos_ascii(region);
      } else if (layer == "hexagon") {
        fpl::DimerConfig d = fpl::pp_to_tiling(fpl::pp_from_json(text));
        art = svg ? fpl::render_hexagon_svg(d) : fpl::render_hexagon_ascii(d);
      } else if (layer == "pp") {
        fpl::PlanePartition pp = fpl::pp_from_json(text);
        art = svg ? fpl::render_pp_svg(pp) : fpl::render_pp_ascii(pp);
      } else {
        fpl::HfplConfig h =
            fpl::hfpl_complement(fpl::pp_to_tiling(fpl::pp_from_json(text)));
        art = svg ? fpl::render_hfpl_svg(h) : fpl::render_hfpl_ascii(h);
      }
      if (rout.empty())
        std::cout << art;
      else
        spill(rout, art);
      rep.flush(json_out);
      return 0;
    }

    if (*cmd_gyrate) {
      Report rep("gyrate");
      rep.doc["parameters"] = {{"steps", steps}};
      fpl::FplGrid g = fpl::grid_from_json(slurp(gin));
      for (int s = 0; s < steps; ++s) g = fpl::wieland_gyration(g);
      std::cout << fpl::grid_to_json(g) << "\n";
      rep.flush(json_out);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind == ErrorKind::parse || e.kind == ErrorKind::bound_exceeded
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

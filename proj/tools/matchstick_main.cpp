#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchstick/bounds.hpp"
#include "matchstick/construct.hpp"
#include "matchstick/graph_io.hpp"
#include "matchstick/planegraph.hpp"
#include "matchstick/search.hpp"

namespace {

using namespace matchstick;
using nlohmann::ordered_json;

// exit codes: 0 ok, 1 check failure, 2 usage/parse/io, 3 ambiguous floor,
// 4 search too large

Tolerance pick_tolerance(const GraphFile& gf, const std::optional<double>& flag) {
  if (flag) return Tolerance{*flag};
  if (gf.tolerance) return Tolerance{*gf.tolerance};
  return Tolerance{};
}

int cmd_validate(const std::string& path, const std::optional<double>& tol_flag) {
  const GraphFile gf = load_graph_file(path);
  const ValidationResult result = validate(to_embedded(gf), pick_tolerance(gf, tol_flag));
  if (result.ok()) {
    std::printf("VALID\n");
    return 0;
  }
  for (const Violation& v : result.violations) std::printf("%s\n", v.to_string().c_str());
  return 1;
}

int cmd_analyze(const std::string& path, const std::optional<double>& tol_flag,
                bool as_json) {
  const GraphFile gf = load_graph_file(path);
  const ValidationResult result = validate(to_embedded(gf), pick_tolerance(gf, tol_flag));
  if (!result.ok()) {
    for (const Violation& v : result.violations) std::printf("%s\n", v.to_string().c_str());
    return 1;
  }
  const MatchstickGraph& m = *result.graph;
  const FaceReport fr = extract_faces(m);
  const BoundsReport rep = full_report(m);
  const BlockDecomposition bd = blocks(m);

  std::optional<BoundaryProfile> prof;
  std::optional<bool> euler, dcount, angles, iso;
  if (bd.is_connected) euler = euler_check(m);
  if (bd.is_biconnected) {
    prof = boundary_profile(m);
    dcount = double_count_check(m);
    angles = angle_sum_check(m);
    iso = isoperimetric_check(m);
  }

  bool failed = !rep.all_pass();
  for (const auto& check : {euler, dcount, angles, iso})
    if (check && !*check) failed = true;

  if (as_json) {
    ordered_json j;
    j["n"] = rep.n;
    j["e"] = rep.e;
    ordered_json faces;
    faces["f"] = fr.f;
    faces["f3"] = fr.f3;
    faces["g"] = fr.g;
    ordered_json hist = ordered_json::object();
    for (const auto& [size, count] : fr.f_hist) hist[std::to_string(size)] = count;
    faces["hist"] = std::move(hist);
    faces["outer_size"] = fr.outer_face >= 0
                              ? static_cast<int>(fr.faces[fr.outer_face].size())
                              : 0;
    j["faces"] = std::move(faces);
    if (prof) {
      ordered_json b;
      b["b"] = prof->b;
      b["area"] = prof->area;
      b["has_chord"] = prof->has_chord;
      ordered_json dh = ordered_json::object();
      for (const auto& [deg, count] : prof->degree_hist) dh[std::to_string(deg)] = count;
      b["degree_hist"] = std::move(dh);
      j["boundary"] = std::move(b);
    } else {
      j["boundary"] = nullptr;
    }
    ordered_json bounds;
    bounds["conjectured_max_edges"] = rep.conjectured_max;
    bounds["edge_bound_floor"] = rep.edge_bound;
    bounds["iso_bound_floor"] = rep.iso_bound;
    bounds["max_triangular_faces"] = rep.max_triangles;
    j["bounds"] = std::move(bounds);
    ordered_json verdicts;
    for (const auto& [name, ok] : rep.verdicts) verdicts[name] = ok;
    j["verdicts"] = std::move(verdicts);
    ordered_json ids;
    ids["euler"] = euler ? ordered_json(*euler) : ordered_json(nullptr);
    ids["double_count"] = dcount ? ordered_json(*dcount) : ordered_json(nullptr);
    ids["angle_sum"] = angles ? ordered_json(*angles) : ordered_json(nullptr);
    ids["isoperimetric"] = iso ? ordered_json(*iso) : ordered_json(nullptr);
    j["identities"] = std::move(ids);
    std::printf("%s\n", j.dump(2).c_str());
    return failed ? 1 : 0;
  }

  std::printf("VALID\n");
  std::printf("n=%lld e=%lld f=%lld f3=%lld g=%lld\n", rep.n, rep.e, fr.f, fr.f3, fr.g);
  if (prof)
    std::printf("boundary: b=%d area=%.6f chord=%s\n", prof->b, prof->area,
                prof->has_chord ? "yes" : "no");
  const auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  std::printf("conjectured_max_edges=%lld %s\n", rep.conjectured_max,
              verdict(rep.e <= rep.conjectured_max));
  std::printf("edge_bound_floor=%lld %s\n", rep.edge_bound,
              verdict(edge_bound_holds(rep.n, rep.e, rep.g)));
  std::printf("iso_bound_floor=%lld %s\n", rep.iso_bound, verdict(rep.e <= rep.iso_bound));
  std::printf("max_triangular_faces=%lld %s\n", rep.max_triangles,
              verdict(rep.f3 <= rep.max_triangles));
  const auto idline = [&](const char* name, const std::optional<bool>& check,
                          const char* why) {
    if (check)
      std::printf("%s: %s\n", name, verdict(*check));
    else
      std::printf("%s: SKIP (%s)\n", name, why);
  };
  idline("euler", euler, "not connected");
  idline("double_count", dcount, "not 2-connected");
  idline("angle_sum", angles, "not 2-connected");
  idline("isoperimetric", iso, "not 2-connected");
  return failed ? 1 : 0;
}

int cmd_generate(std::int64_t n, const std::string& out_path,
                 const std::optional<std::string>& svg_path, bool circles) {
  const std::vector<LatticePoint> pts = spiral_points(n);
  const MatchstickGraph m = penny_graph_of(pts);
  save_graph_file(lattice_graph_file(pts, m.edges()), out_path);
  if (svg_path) write_text_file(render_svg(m.graph(), circles), *svg_path);
  std::printf("n=%lld edges=%d\n", static_cast<long long>(n), m.e());
  return 0;
}

int cmd_settled(std::int64_t n_max) {
  for (const std::int64_t n : settled_list(n_max))
    std::printf("%lld\n", static_cast<long long>(n));
  return 0;
}

int cmd_lemmas(std::int64_t sweep_max) {
  for (std::int64_t n = 4; n <= sweep_max; ++n)
    for (std::int64_t n1 = 3; n1 <= n + 2 - 3; ++n1) {
      const std::int64_t n2 = n + 2 - n1;
      if (!split_floor_check(n, n1, n2)) {
        std::printf("counterexample: n=%lld n1=%lld n2=%lld\n",
                    static_cast<long long>(n), static_cast<long long>(n1),
                    static_cast<long long>(n2));
        return 1;
      }
    }
  std::printf("split floor inequality: OK for all n <= %lld\n",
              static_cast<long long>(sweep_max));

  if (!constant_inequalities_hold()) {
    std::printf("counterexample: a fixed constant inequality failed\n");
    return 1;
  }
  std::printf("constant inequalities: OK\n");

  if (const auto bad = boundary_removal_bound_sweep(10000)) {
    std::printf("counterexample: boundary removal bound at n=%lld b=%lld\n",
                static_cast<long long>(bad->first), static_cast<long long>(bad->second));
    return 1;
  }
  std::printf("boundary removal inequality: OK for n <= 10000\n");
  return 0;
}

int cmd_search(int n, int radius, bool no_prune, int workers,
               const std::string& out_path) {
  SearchConfig cfg;
  cfg.n = n;
  cfg.radius = radius;
  cfg.prune = !no_prune;
  cfg.workers = workers;
  const SearchResult result = lattice_max_edges(cfg);
  std::printf("max_edges=%lld\n", static_cast<long long>(result.best));

  const MatchstickGraph witness = penny_graph_of(result.witness);
  save_graph_file(lattice_graph_file(result.witness, witness.edges()), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchstick graph validation, analysis and extremal construction"};
  app.require_subcommand(1);

  std::string path, out_path = "witness.json";
  std::optional<double> tol_flag;
  std::optional<std::string> svg_path;
  bool as_json = false, circles = false, no_prune = false;
  std::int64_t n_arg = 1, n_max = 1, sweep_max = 4;
  int radius = 3, workers = 1;

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file");
  validate_cmd->add_option("path", path)->required();
  validate_cmd->add_option("--tolerance", tol_flag, "unit-length tolerance");

  auto* analyze_cmd = app.add_subcommand("analyze", "bounds and identity report");
  analyze_cmd->add_option("path", path)->required();
  analyze_cmd->add_option("--tolerance", tol_flag);
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");

  auto* generate_cmd = app.add_subcommand("generate", "extremal spiral graph");
  generate_cmd->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--out", out_path)->required();
  generate_cmd->add_option("--svg", svg_path, "also write an SVG drawing");
  generate_cmd->add_flag("--circles", circles, "draw the radius-1/2 circles");

  auto* settled_cmd = app.add_subcommand("settled", "vertex counts pinned by the bound");
  settled_cmd->add_option("--max", n_max)->required()->check(CLI::PositiveNumber);

  auto* lemmas_cmd = app.add_subcommand("lemmas", "exhaustive inequality sweeps");
  lemmas_cmd->add_option("--sweep-max", sweep_max)->required()->check(CLI::Range(4, 1 << 20));

  auto* search_cmd = app.add_subcommand("search", "brute-force lattice maximum");
  search_cmd->add_option("n", n_arg)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--radius", radius);
  search_cmd->add_option("--out", out_path, "witness file (default witness.json)");
  search_cmd->add_option("--workers", workers);
  search_cmd->add_flag("--no-prune", no_prune);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, tol_flag);
    if (analyze_cmd->parsed()) return cmd_analyze(path, tol_flag, as_json);
    if (generate_cmd->parsed()) return cmd_generate(n_arg, out_path, svg_path, circles);
    if (settled_cmd->parsed()) return cmd_settled(n_max);
    if (lemmas_cmd->parsed()) return cmd_lemmas(sweep_max);
    if (search_cmd->parsed())
      return cmd_search(static_cast<int>(n_arg), radius, no_prune, workers, out_path);
  } catch (const AmbiguousFloorError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 3;
  } catch (const SearchTooLargeError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 4;
  } catch (const ParseError& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}

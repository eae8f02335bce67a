#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <doctest.h>

#include "corpus.hpp"
#include "matchstick/construct.hpp"
#include "matchstick/bounds.hpp"
#include "matchstick/graph_io.hpp"

using namespace matchstick;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(MATCHSTICK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "matchstick_tests";
  fs::create_directories(dir);
  return dir / name;
}

int count_substr(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("graph file round trip: lattice form") {
  const auto pts = spiral_points(7);
  const MatchstickGraph m = penny_graph_of(pts);
  const GraphFile out = lattice_graph_file(pts, m.edges());
  const fs::path path = temp_file("roundtrip.json");
  save_graph_file(out, path.string());

  const GraphFile in = load_graph_file(path.string());
  REQUIRE(in.lattice.has_value());
  CHECK(*in.lattice == pts);
  CHECK(in.edges == m.edges());
  CHECK_FALSE(in.tolerance.has_value());

  const EmbeddedGraph g = to_embedded(in);
  REQUIRE(g.vertices.size() == 7);
  CHECK(g.vertices[1].exact == LatticePoint{1, 0});
  CHECK(validate(g, Tolerance{0.0}).ok());
}

TEST_CASE("graph file round trip: floating form with tolerance") {
  GraphFile gf;
  gf.vertices = {{0.0, 0.0}, {1.0, 0.0}};
  gf.edges = {{0, 1}};
  gf.tolerance = 1e-6;
  const fs::path path = temp_file("float.json");
  save_graph_file(gf, path.string());
  const GraphFile in = load_graph_file(path.string());
  CHECK_FALSE(in.lattice.has_value());
  CHECK(in.vertices == gf.vertices);
  CHECK(in.tolerance == 1e-6);
  const EmbeddedGraph g = to_embedded(in);
  CHECK_FALSE(g.vertices[0].exact.has_value());
}

TEST_CASE("graph file parse errors") {
  const fs::path bad = temp_file("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(load_graph_file(bad.string()), ParseError);

  const fs::path mismatch = temp_file("mismatch.json");
  std::ofstream(mismatch)
      << R"({"vertices": [[0,0]], "lattice": [[0,0],[1,0]], "edges": []})";
  CHECK_THROWS_AS(load_graph_file(mismatch.string()), ParseError);

  const fs::path no_verts = temp_file("noverts.json");
  std::ofstream(no_verts) << R"({"edges": []})";
  CHECK_THROWS_AS(load_graph_file(no_verts.string()), ParseError);

  const fs::path bad_index = temp_file("badindex.json");
  std::ofstream(bad_index) << R"({"lattice": [[0,0],[1,0]], "edges": [[0,5]]})";
  const GraphFile gf = load_graph_file(bad_index.string());
  CHECK_THROWS_AS(to_embedded(gf), ParseError);

  CHECK_THROWS_AS(load_graph_file("/nonexistent/nope.json"), ParseError);
}

TEST_CASE("json serialization is byte-stable") {
  const auto pts = spiral_points(17);
  const MatchstickGraph m = penny_graph_of(pts);
  const GraphFile gf = lattice_graph_file(pts, m.edges());
  CHECK(graph_file_to_json(gf) == graph_file_to_json(gf));
}

TEST_CASE("svg rendering: fixed constants and structure") {
  const MatchstickGraph m = corpus::unit_triangle();
  const std::string svg = render_svg(m.graph(), false);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" ", 0) == 0);
  // viewport padded by 0.6 on each side, y flipped
  CHECK(svg.find("viewBox=\"-0.600000 -1.466025 2.200000 2.066025\"") != std::string::npos);
  CHECK(count_substr(svg, "<line ") == 3);
  CHECK(count_substr(svg, "stroke-width=\"0.05\"") == 3);
  CHECK(count_substr(svg, "r=\"0.04\"") == 3);
  CHECK(count_substr(svg, "r=\"0.5\"") == 0);

  const std::string with_pennies = render_svg(m.graph(), true);
  CHECK(count_substr(with_pennies, "r=\"0.5\"") == 3);
  // byte-stable
  CHECK(render_svg(m.graph(), true) == with_pennies);
}

TEST_CASE("cli: validate exit codes") {
  const fs::path tri = temp_file("tri.json");
  std::ofstream(tri) << R"({"lattice": [[0,0],[1,0],[0,1]], "edges": [[0,1],[0,2],[1,2]]})";
  const CliRun ok = run_cli("validate " + tri.string());
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "VALID\n");

  const fs::path crossing = temp_file("crossing.json");
  std::ofstream(crossing)
      << R"({"vertices": [[0,0],[1,0],[1,1],[0,1]],
             "edges": [[0,1],[1,2],[2,3],[3,0],[0,2],[1,3]]})";
  const CliRun bad = run_cli("validate " + crossing.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("EdgesCross (0,2) x (1,3)") != std::string::npos);
  CHECK(count_substr(bad.out, "NonUnitEdge") == 2);

  const fs::path malformed = temp_file("malformed.json");
  std::ofstream(malformed) << "{ nope";
  CHECK(run_cli("validate " + malformed.string()).exit_code == 2);

  CHECK(run_cli("validate /does/not/exist.json").exit_code == 2);
}

TEST_CASE("cli: settled") {
  const CliRun five = run_cli("settled --max 5");
  CHECK(five.exit_code == 0);
  CHECK(five.out == "1\n2\n3\n4\n5\n");

  const CliRun fifteen = run_cli("settled --max 15");
  CHECK(fifteen.exit_code == 0);
  CHECK(fifteen.out.find("\n15") == std::string::npos);
  CHECK(fifteen.out.rfind("14\n") == fifteen.out.size() - 3);
}

TEST_CASE("cli: lemmas") {
  CHECK(run_cli("lemmas --sweep-max 3").exit_code == 2);  // below the minimum
  const CliRun ok = run_cli("lemmas --sweep-max 100");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("OK") != std::string::npos);
}

TEST_CASE("cli: generate, analyze round trip") {
  const fs::path out = temp_file("gen17.json");
  const fs::path svg = temp_file("gen17.svg");
  const CliRun gen =
      run_cli("generate 17 --out " + out.string() + " --svg " + svg.string() + " --circles");
  CHECK(gen.exit_code == 0);
  CHECK(gen.out == "n=17 edges=36\n");
  CHECK(fs::exists(svg));
  {
    std::ifstream in(svg);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    CHECK(count_substr(content, "r=\"0.5\"") == 17);
    CHECK(count_substr(content, "<line ") == 36);
  }

  CHECK(run_cli("validate " + out.string()).exit_code == 0);

  const CliRun analyze = run_cli("analyze " + out.string());
  CHECK(analyze.exit_code == 0);
  CHECK(analyze.out.find("n=17 e=36 f=20 f3=20 g=0") != std::string::npos);
  CHECK(analyze.out.find("conjectured_max_edges=36 PASS") != std::string::npos);
  CHECK(count_substr(analyze.out, "FAIL") == 0);

  // machine-readable output is byte-stable across runs
  const CliRun j1 = run_cli("analyze --json " + out.string());
  const CliRun j2 = run_cli("analyze --json " + out.string());
  CHECK(j1.exit_code == 0);
  CHECK(j1.out == j2.out);
  CHECK(j1.out.find("\"conjectured_max_edges\": 36") != std::string::npos);
}

TEST_CASE("cli: generate then analyze reports the extremal edge count") {
  for (const int n : {1, 4, 7, 17, 40}) {
    const fs::path out = temp_file("rt" + std::to_string(n) + ".json");
    const CliRun gen = run_cli("generate " + std::to_string(n) + " --out " + out.string());
    REQUIRE(gen.exit_code == 0);
    const CliRun analyze = run_cli("analyze " + out.string());
    REQUIRE(analyze.exit_code == 0);
    const std::string expected =
        "conjectured_max_edges=" + std::to_string(conjectured_max_edges(n)) + " PASS";
    REQUIRE(analyze.out.find(expected) != std::string::npos);
    const std::string e_line = "e=" + std::to_string(conjectured_max_edges(n)) + " ";
    REQUIRE(analyze.out.find(e_line) != std::string::npos);
  }
}

TEST_CASE("cli: generate single vertex") {
  const fs::path out = temp_file("gen1.json");
  const CliRun gen = run_cli("generate 1 --out " + out.string());
  CHECK(gen.exit_code == 0);
  CHECK(gen.out == "n=1 edges=0\n");
  const GraphFile gf = load_graph_file(out.string());
  REQUIRE(gf.lattice.has_value());
  CHECK(gf.lattice->size() == 1);
  CHECK(gf.edges.empty());
}

TEST_CASE("cli: search prints the maximum and writes a valid witness") {
  const fs::path out = temp_file("witness3.json");
  const CliRun r3 = run_cli("search 3 --radius 3 --out " + out.string());
  CHECK(r3.exit_code == 0);
  CHECK(r3.out == "max_edges=3\n");
  CHECK(run_cli("validate " + out.string()).exit_code == 0);

  const fs::path out8 = temp_file("witness8.json");
  const CliRun r8 = run_cli("search 8 --radius 3 --workers 2 --out " + out8.string());
  CHECK(r8.exit_code == 0);
  CHECK(r8.out == "max_edges=14\n");

  CHECK(run_cli("search 9 --radius 3 --out " + temp_file("w9.json").string()).exit_code ==
        4);
}

TEST_CASE("cli: usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("settled").exit_code == 2);  // --max is required
}

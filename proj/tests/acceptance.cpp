// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "matchstick/bounds.hpp"
#include "matchstick/construct.hpp"
#include "matchstick/planegraph.hpp"
#include "matchstick/search.hpp"

using namespace matchstick;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// ---- criterion 1: settled-list reproduction through the CLI ----

const std::vector<std::int64_t> kPublishedSettled = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14, 16, 18, 19, 20, 21,
    23, 24, 26, 27, 29, 30, 32, 33, 36, 37, 39, 40, 43, 44, 47, 48, 51, 52, 55,
    56, 60, 61, 65, 69, 70, 74, 75, 79, 80, 85, 90, 91, 96, 102, 108, 114, 120,
    127};

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = std::string(MATCHSTICK_CLI_PATH) + " settled --max 130";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    report(1, false, "could not launch the CLI");
    return;
  }
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  const double elapsed = seconds_since(t0);

  std::vector<std::int64_t> values;
  std::istringstream stream(out);
  std::int64_t v;
  while (stream >> v) values.push_back(v);

  const bool exact = values == kPublishedSettled;
  const bool exited_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  report(1, exact && exited_ok && elapsed < 1.0,
         fmt("settled --max 130: %zu values, exact match=%s, %.3f s (< 1 s)",
             values.size(), exact ? "yes" : "no", elapsed));
}

// ---- criterion 2: extremality audit to n = 2000 ----

void criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = extremality_audit(2000);
  const double elapsed = seconds_since(t0);
  long long bad = 0;
  for (const AuditRow& row : rows)
    if (!row.ok) ++bad;
  report(2, bad == 0 && elapsed < 60.0,
         fmt("spiral prefixes n <= 2000: %lld mismatches, %.2f s (< 60 s)", bad,
             elapsed));
}

// ---- criteria 3 and 4 share the corpus ----

struct Corpus {
  std::vector<MatchstickGraph> graphs;
  int random_connected = 0;
};

Corpus build_corpus() {
  Corpus corpus;
  for (std::int64_t n = 1; n <= 200; ++n)
    corpus.graphs.push_back(penny_graph_of(spiral_points(n)));
  corpus.graphs.push_back(corpus::unit_triangle());
  corpus.graphs.push_back(corpus::rhombus());
  corpus.graphs.push_back(corpus::hexagon_cycle());
  corpus.graphs.push_back(corpus::wheel7());
  corpus.graphs.push_back(corpus::bowtie());
  corpus.graphs.push_back(corpus::path3());

  std::mt19937 rng(20260809);
  std::uniform_int_distribution<int> size(5, 60);
  for (int i = 0; i < 510; ++i) {
    corpus.graphs.push_back(corpus::random_connected_graph(rng, size(rng)));
    ++corpus.random_connected;
  }
  std::uniform_int_distribution<int> tris(6, 40);
  for (int i = 0; i < 120; ++i)
    corpus.graphs.push_back(corpus::random_triangle_blob(rng, tris(rng)));
  return corpus;
}

void criterion3(const Corpus& corpus) {
  long long validated = 0, euler_fail = 0, double_count_fail = 0, angle_fail = 0,
            iso_fail = 0, biconnected = 0;
  for (const MatchstickGraph& m : corpus.graphs) {
    if (!validate(m.graph(), m.tol()).ok()) {
      ++euler_fail;  // an invalid corpus graph counts as a failure outright
      continue;
    }
    ++validated;
    if (!euler_check(m)) ++euler_fail;
    if (!blocks(m).is_biconnected) continue;
    ++biconnected;
    if (!double_count_check(m)) ++double_count_fail;
    if (!angle_sum_check(m)) ++angle_fail;
    // the strict triangle form b^2 > pi*sqrt(3)*f3 plus b^2 >= 4*pi*A
    if (!isoperimetric_check(m)) ++iso_fail;
  }
  const long long failures =
      euler_fail + double_count_fail + angle_fail + iso_fail;
  report(3, failures == 0 && corpus.random_connected >= 500,
         fmt("%lld graphs validated (%d random connected, %lld biconnected): "
             "euler=%lld double_count=%lld angle_sum=%lld isoperimetric=%lld failures",
             validated, corpus.random_connected, biconnected, euler_fail,
             double_count_fail, angle_fail, iso_fail));
}

void criterion4(const Corpus& corpus) {
  long long edge_bound_fail = 0, iso_bound_fail = 0;
  for (const MatchstickGraph& m : corpus.graphs) {
    const BoundsReport rep = full_report(m);
    if (!edge_bound_holds(rep.n, rep.e, rep.g)) ++edge_bound_fail;
    if (rep.e > rep.iso_bound) ++iso_bound_fail;
  }

  // integer-arithmetic boundary behavior at every n <= 127 where 12n-3 is a
  // perfect square (includes n = 7)
  bool exact_boundary = true;
  for (const std::int64_t n : {1LL, 7LL, 19LL, 37LL, 61LL, 91LL, 127LL}) {
    const std::int64_t root = floor_isqrt(12 * n - 3);
    if (root * root != 12 * n - 3) exact_boundary = false;
    for (const std::int64_t g : {0LL, 1LL}) {
      if (!edge_bound_holds(n, 3 * n + g - root, g)) exact_boundary = false;
      if (edge_bound_holds(n, 3 * n + g - root + 1, g)) exact_boundary = false;
    }
  }

  report(4, edge_bound_fail == 0 && iso_bound_fail == 0 && exact_boundary,
         fmt("%zu graphs: edge_bound failures=%lld, iso_bound failures=%lld, "
             "perfect-square boundary exact=%s",
             corpus.graphs.size(), edge_bound_fail, iso_bound_fail,
             exact_boundary ? "yes" : "no"));
}

// ---- criterion 5: lemma sweeps ----

void criterion5() {
  const auto t0 = std::chrono::steady_clock::now();
  bool sweep_ok = true;
  for (std::int64_t n = 4; n <= 500 && sweep_ok; ++n)
    for (std::int64_t n1 = 3; n1 <= n - 1; ++n1)
      if (!split_floor_check(n, n1, n + 2 - n1)) {
        sweep_ok = false;
        break;
      }
  const bool constants_ok = constant_inequalities_hold();
  const bool removal_ok = !boundary_removal_bound_sweep(10000).has_value();
  const double elapsed = seconds_since(t0);
  report(5, sweep_ok && constants_ok && removal_ok && elapsed < 10.0,
         fmt("split-floor sweep n <= 500: %s; constant inequalities: %s; "
             "boundary removal n <= 10000: %s; %.2f s (< 10 s)",
             sweep_ok ? "ok" : "counterexample", constants_ok ? "ok" : "failed",
             removal_ok ? "ok" : "counterexample", elapsed));
}

// ---- criterion 6: search oracle equivalence ----

void criterion6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool all_equal = true;
  std::string first_bad;
  for (int n = 1; n <= 8; ++n) {
    const std::int64_t expected = conjectured_max_edges(n);
    SearchResult reference;
    bool have_reference = false;
    for (const bool prune : {true, false})
      for (const int workers : {1, 4}) {
        SearchConfig cfg;
        cfg.n = n;
        cfg.radius = 3;
        cfg.prune = prune;
        cfg.workers = workers;
        const SearchResult result = lattice_max_edges(cfg);
        if (result.best != expected ||
            (have_reference && (result.best != reference.best ||
                                result.witness != reference.witness))) {
          all_equal = false;
          if (first_bad.empty())
            first_bad = fmt(" first mismatch at n=%d prune=%d workers=%d", n,
                            prune ? 1 : 0, workers);
        }
        if (!have_reference) {
          reference = result;
          have_reference = true;
        }
      }
  }
  const double elapsed = seconds_since(t0);
  report(6, all_equal && elapsed < 300.0,
         fmt("lattice maxima n <= 8 equal the closed form under pruned/unpruned "
             "x 1/4 workers: %s; %.2f s (< 300 s)%s",
             all_equal ? "yes" : "no", elapsed, first_bad.c_str()));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  const Corpus corpus = build_corpus();
  criterion3(corpus);
  criterion4(corpus);
  criterion5();
  criterion6();
  report(7, true,
         "proof-level results beyond the settled list are exercised by the "
         "property suites of criteria 3-5; no separate quantitative target");
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

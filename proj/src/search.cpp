#include "matchstick/search.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "matchstick/bounds.hpp"

namespace matchstick {

namespace {

std::int64_t hex_dist(LatticePoint p) {
  return std::max({std::abs(p.a), std::abs(p.b), std::abs(p.a + p.b)});
}

std::vector<LatticePoint> patch_points(int radius) {
  std::vector<LatticePoint> pts;
  for (std::int64_t a = -radius; a <= radius; ++a)
    for (std::int64_t b = -radius; b <= radius; ++b)
      if (hex_dist({a, b}) <= radius) pts.push_back({a, b});
  std::sort(pts.begin(), pts.end());  // lexicographic by (a, b)
  return pts;
}

double binomial_estimate(int n, int k) {
  double acc = 1.0;
  for (int i = 0; i < k; ++i) {
    acc *= static_cast<double>(n - i) / (i + 1);
    if (acc > 1e18) return acc;
  }
  return acc;
}

struct Best {
  std::int64_t value = -1;
  std::vector<int> subset;
};

class Searcher {
 public:
  Searcher(const std::vector<LatticePoint>& cand, int n, bool prune,
           std::int64_t ceiling)
      : n_(n),
        ncand_(static_cast<int>(cand.size())),
        words_((cand.size() + 63) / 64),
        prune_(prune),
        ceiling_(ceiling) {
    adj_.assign(ncand_, std::vector<std::uint64_t>(words_, 0));
    for (int i = 0; i < ncand_; ++i)
      for (int j = 0; j < ncand_; ++j)
        if (j != i && lattice_unit(cand[i], cand[j]))
          adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
  }

  // Enumerates, in lexicographic order, every n-subset whose smallest element
  // index is congruent to `lane` modulo `stride`.
  Best run_lane(int lane, int stride) const {
    Best best;
    std::vector<std::uint64_t> chosen(words_, 0);
    std::vector<int> cur;
    cur.reserve(n_);
    for (int i = lane; i <= ncand_ - n_; i += stride) {
      if (prune_ && best.value >= ceiling_) break;
      cur.push_back(i);
      chosen[i / 64] |= std::uint64_t{1} << (i % 64);
      descend(i + 1, n_ - 1, 0, chosen, cur, best);
      chosen[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      cur.pop_back();
    }
    return best;
  }

 private:
  void descend(int start, int remaining, std::int64_t edges,
               std::vector<std::uint64_t>& chosen, std::vector<int>& cur,
               Best& best) const {
    if (remaining == 0) {
      if (edges > best.value) {
        best.value = edges;
        best.subset = cur;
      }
      return;
    }
    if (prune_) {
      if (best.value >= ceiling_) return;
      // a future point contributes at most its lattice degree of 6
      if (edges + 6LL * remaining <= best.value) return;
    }
    for (int i = start; i <= ncand_ - remaining; ++i) {
      std::int64_t gain = 0;
      for (std::size_t w = 0; w < words_; ++w)
        gain += std::popcount(adj_[i][w] & chosen[w]);
      cur.push_back(i);
      chosen[i / 64] |= std::uint64_t{1} << (i % 64);
      descend(i + 1, remaining - 1, edges + gain, chosen, cur, best);
      chosen[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      cur.pop_back();
    }
  }

  int n_;
  int ncand_;
  std::size_t words_;
  bool prune_;
  std::int64_t ceiling_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

}  // namespace

SearchResult lattice_max_edges(const SearchConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("subset size must be >= 1");
  if (cfg.workers < 1) throw std::invalid_argument("worker count must be >= 1");
  if (cfg.radius < ceil_isqrt(cfg.n))
    throw std::invalid_argument("radius too small to host an extremal configuration");

  const std::vector<LatticePoint> cand = patch_points(cfg.radius);
  const int ncand = static_cast<int>(cand.size());
  if (cfg.n > ncand) throw std::invalid_argument("subset size exceeds the patch");

  const double work = binomial_estimate(ncand, cfg.n);
  if (work > 1e8) throw SearchTooLargeError(work);

  const Searcher searcher(cand, cfg.n, cfg.prune, conjectured_max_edges(cfg.n));

  const int lanes = std::min(cfg.workers, ncand - cfg.n + 1);
  std::vector<Best> lane_best(std::max(lanes, 1));
  if (lanes <= 1) {
    lane_best[0] = searcher.run_lane(0, 1);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(lanes);
    for (int lane = 0; lane < lanes; ++lane)
      threads.emplace_back(
          [&, lane] { lane_best[lane] = searcher.run_lane(lane, lanes); });
    for (auto& t : threads) t.join();
  }

  // Deterministic merge: larger value wins, ties go to the lexicographically
  // least subset. Independent of lane count and scheduling.
  Best merged;
  for (const Best& b : lane_best) {
    if (b.value > merged.value ||
        (b.value == merged.value && b.value >= 0 && b.subset < merged.subset))
      merged = b;
  }

  SearchResult out;
  out.best = std::max<std::int64_t>(merged.value, 0);
  for (int idx : merged.subset) out.witness.push_back(cand[idx]);
  return out;
}

}  // namespace matchstick

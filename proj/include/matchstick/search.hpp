#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "matchstick/geometry.hpp"

namespace matchstick {

struct SearchTooLargeError : std::runtime_error {
  double estimated_work;
  explicit SearchTooLargeError(double work)
      : std::runtime_error("search space too large (~" + std::to_string(work) +
                           " subsets)"),
        estimated_work(work) {}
};

struct SearchConfig {
  int n = 1;          // subset size
  int radius = 3;     // hexagonal ring bound of the candidate patch
  bool prune = true;  // branch-and-bound against the penny-graph ceiling
  int workers = 1;    // results are independent of the worker count
};

struct SearchResult {
  std::int64_t best = 0;
  std::vector<LatticePoint> witness;  // lexicographically least maximizer
};

// Exhaustive maximum of the unit-distance edge count over all n-subsets of
// the lattice patch of the given radius. Lattice subsets are penny graphs,
// whose maximum is the established 3n - ceil(sqrt(12n-3)), so the search
// reproduces that value whenever the patch can host an extremal
// configuration, and is always a certified lower bound for the matchstick
// maximum. Throws SearchTooLargeError when the subset count exceeds 1e8.
SearchResult lattice_max_edges(const SearchConfig& cfg);

}  // namespace matchstick

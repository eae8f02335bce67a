#pragma once

#include <cstdint>
#include <vector>

#include "matchstick/planegraph.hpp"

namespace matchstick {

// First n points of the hexagonal spiral: the origin, then concentric rings.
// Ring k enters at (k, 1-k), next to the previous ring's end point (k-1, 1-k),
// and walks counterclockwise, ending at (k, -k). Every prefix of this order
// realizes the extremal edge and triangle counts (extremality_audit verifies).
std::vector<LatticePoint> spiral_points(std::int64_t n);

// Graph on the given distinct lattice points with an edge for every pair at
// distance exactly 1. Such a graph can never have crossing edges, so the
// matchstick guarantees hold by construction.
MatchstickGraph penny_graph_of(const std::vector<LatticePoint>& points);

struct AuditRow {
  std::int64_t n = 0;
  std::int64_t edges = 0;
  std::int64_t triangles = 0;
  bool ok = false;  // edges == 3n - ceil(sqrt(12n-3)) and
                    // triangles == 2n + 1 - ceil(sqrt(12n-3))
};

// Builds the spiral prefix graph for every n <= n_max, counts edges and
// bounded triangular faces through face extraction, and compares both against
// the closed forms.
std::vector<AuditRow> extremality_audit(std::int64_t n_max);

}  // namespace matchstick

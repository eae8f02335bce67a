#include "matchstick/construct.hpp"

#include <stdexcept>
#include <unordered_map>

#include "matchstick/bounds.hpp"

namespace matchstick {

namespace {

std::uint64_t point_key(LatticePoint p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.a)) << 32) |
         static_cast<std::uint32_t>(p.b);
}

}  // namespace

std::vector<LatticePoint> spiral_points(std::int64_t n) {
  if (n < 1) throw std::domain_error("point count must be >= 1");
  std::vector<LatticePoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  pts.push_back({0, 0});
  constexpr LatticePoint kNE{0, 1}, kNW{-1, 1}, kW{-1, 0}, kSW{0, -1}, kSE{1, -1},
      kE{1, 0};
  for (std::int64_t k = 1; static_cast<std::int64_t>(pts.size()) < n; ++k) {
    LatticePoint cur{k, 1 - k};
    pts.push_back(cur);
    const std::pair<LatticePoint, std::int64_t> legs[] = {
        {kNE, k - 1}, {kNW, k}, {kW, k}, {kSW, k}, {kSE, k}, {kE, k}};
    for (const auto& [step, count] : legs)
      for (std::int64_t i = 0; i < count; ++i) {
        if (static_cast<std::int64_t>(pts.size()) >= n) return pts;
        cur = {cur.a + step.a, cur.b + step.b};
        pts.push_back(cur);
      }
  }
  return pts;
}

MatchstickGraph penny_graph_of(const std::vector<LatticePoint>& points) {
  std::unordered_map<std::uint64_t, int> index;
  index.reserve(points.size() * 2);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!index.emplace(point_key(points[i]), static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate lattice points");

  EmbeddedGraph g;
  g.vertices.reserve(points.size());
  for (const LatticePoint p : points) g.vertices.push_back(lattice_to_cartesian(p));
  for (std::size_t i = 0; i < points.size(); ++i) {
    const LatticePoint p = points[i];
    // only three of the six steps, so each unit pair is found once
    for (const LatticePoint step : {kUnitSteps[0], kUnitSteps[1], kUnitSteps[2]}) {
      const auto it = index.find(point_key({p.a + step.a, p.b + step.b}));
      if (it != index.end()) g.edges.emplace_back(static_cast<int>(i), it->second);
    }
  }
  return MatchstickGraph::assume_valid(std::move(g), Tolerance{0.0});
}

std::vector<AuditRow> extremality_audit(std::int64_t n_max) {
  if (n_max < 1) throw std::domain_error("n_max must be >= 1");
  const std::vector<LatticePoint> pts = spiral_points(n_max);
  std::vector<AuditRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::vector<LatticePoint> prefix(pts.begin(), pts.begin() + n);
    const MatchstickGraph m = penny_graph_of(prefix);
    const FaceReport fr = extract_faces(m);
    AuditRow row;
    row.n = n;
    row.edges = m.e();
    row.triangles = fr.f3;
    row.ok = row.edges == conjectured_max_edges(n) &&
             row.triangles == max_triangular_faces(n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace matchstick

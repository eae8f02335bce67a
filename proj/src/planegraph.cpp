#include "matchstick/planegraph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace matchstick {

namespace {

std::int64_t cell_key(int ix, int iy) {
  return (static_cast<std::int64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy);
}

double dist(const PlanePoint& p, const PlanePoint& q) {
  return std::hypot(p.x - q.x, p.y - q.y);
}

bool coincident_vertices(const PlanePoint& p, const PlanePoint& q, Tolerance tol) {
  if (p.exact && q.exact) return *p.exact == *q.exact;
  if (p.x == q.x && p.y == q.y) return true;
  return dist(p, q) < tol.eps();
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Rotation system: per-vertex incident directed edges sorted counterclockwise.
// Directed edge ids: edge k yields 2k (first->second) and 2k+1 (second->first).
struct Rotation {
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, dir id)
  std::vector<int> pos;                               // dir id -> index in adj[origin]

  static Rotation build(const MatchstickGraph& m) {
    const auto& vs = m.vertices();
    Rotation rot;
    rot.adj.assign(vs.size(), {});
    rot.pos.assign(2 * m.edges().size(), -1);
    for (int k = 0; k < m.e(); ++k) {
      const auto [u, v] = m.edges()[k];
      rot.adj[u].emplace_back(v, 2 * k);
      rot.adj[v].emplace_back(u, 2 * k + 1);
    }
    for (std::size_t v = 0; v < vs.size(); ++v) {
      auto& lst = rot.adj[v];
      std::sort(lst.begin(), lst.end(), [&](const auto& lhs, const auto& rhs) {
        const double al = std::atan2(vs[lhs.first].y - vs[v].y, vs[lhs.first].x - vs[v].x);
        const double ar = std::atan2(vs[rhs.first].y - vs[v].y, vs[rhs.first].x - vs[v].x);
        if (al != ar) return al < ar;
        return lhs.first < rhs.first;
      });
      for (std::size_t i = 0; i < lst.size(); ++i) rot.pos[lst[i].second] = static_cast<int>(i);
    }
    return rot;
  }

  int origin(int dir, const MatchstickGraph& m) const {
    const auto [u, v] = m.edges()[dir / 2];
    return (dir & 1) ? v : u;
  }
  int target(int dir, const MatchstickGraph& m) const {
    const auto [u, v] = m.edges()[dir / 2];
    return (dir & 1) ? u : v;
  }
  // Face successor of u->v: v->w with w the clockwise-next neighbor of v after u.
  int next_in_face(int dir, const MatchstickGraph& m) const {
    const int v = target(dir, m);
    const auto& lst = adj[v];
    const int i = pos[dir ^ 1];
    const int j = (i + static_cast<int>(lst.size()) - 1) % static_cast<int>(lst.size());
    return lst[j].second;
  }
};

double walk_signed_area(const std::vector<int>& walk, const std::vector<PlanePoint>& vs) {
  double acc = 0.0;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto& p = vs[walk[i]];
    const auto& q = vs[walk[(i + 1) % walk.size()]];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc / 2.0;
}

int distinct_count(const std::vector<int>& walk) {
  std::vector<int> tmp(walk);
  std::sort(tmp.begin(), tmp.end());
  tmp.erase(std::unique(tmp.begin(), tmp.end()), tmp.end());
  return static_cast<int>(tmp.size());
}

int component_count(const MatchstickGraph& m) {
  Dsu dsu(m.n());
  for (const auto& [u, v] : m.edges()) dsu.unite(u, v);
  std::set<int> roots;
  for (int v = 0; v < m.n(); ++v) roots.insert(dsu.find(v));
  return static_cast<int>(roots.size());
}

std::vector<int> vertex_degrees(const MatchstickGraph& m) {
  std::vector<int> deg(m.n(), 0);
  for (const auto& [u, v] : m.edges()) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

}  // namespace

void check_structure(const EmbeddedGraph& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge index out of range");
    if (u == v) throw std::invalid_argument("self-loop edge");
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) throw std::invalid_argument("duplicate edge");
  }
}

std::string Violation::to_string() const {
  char buf[128];
  switch (kind) {
    case ViolationKind::NonUnitEdge:
      std::snprintf(buf, sizeof buf, "NonUnitEdge (%d,%d) length=%.12g", a, b, measured);
      break;
    case ViolationKind::EdgesCross:
      std::snprintf(buf, sizeof buf, "EdgesCross (%d,%d) x (%d,%d)", a, b, c, d);
      break;
    case ViolationKind::DuplicateVertices:
      std::snprintf(buf, sizeof buf, "DuplicateVertices (%d,%d) dist=%.12g", a, b, measured);
      break;
  }
  return buf;
}

ValidationResult validate(EmbeddedGraph g, Tolerance tol) {
  check_structure(g);
  ValidationResult result;
  const auto& vs = g.vertices;
  const int n = static_cast<int>(vs.size());
  const int ne = static_cast<int>(g.edges.size());

  // Coincident vertices, via a coarse grid (any duplicate pair lands in
  // neighboring cells since eps < 0.05).
  {
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    const double cell = 0.5;
    for (int i = 0; i < n; ++i)
      grid[cell_key(static_cast<int>(std::floor(vs[i].x / cell)),
                    static_cast<int>(std::floor(vs[i].y / cell)))].push_back(i);
    std::vector<std::pair<int, int>> dups;
    for (int i = 0; i < n; ++i) {
      const int ix = static_cast<int>(std::floor(vs[i].x / cell));
      const int iy = static_cast<int>(std::floor(vs[i].y / cell));
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(cell_key(ix + dx, iy + dy));
          if (it == grid.end()) continue;
          for (int j : it->second)
            if (j > i && coincident_vertices(vs[i], vs[j], tol)) dups.emplace_back(i, j);
        }
    }
    std::sort(dups.begin(), dups.end());
    for (const auto& [i, j] : dups)
      result.violations.push_back(
          {ViolationKind::DuplicateVertices, i, j, -1, -1, dist(vs[i], vs[j])});
  }

  double max_len = 0.0;
  for (const auto& [u, v] : g.edges) {
    const double len = dist(vs[u], vs[v]);
    max_len = std::max(max_len, len);
    if (!is_unit_length(vs[u], vs[v], tol))
      result.violations.push_back({ViolationKind::NonUnitEdge, u, v, -1, -1, len});
  }

  // Candidate edge pairs for the crossing test. Unit-length segments that
  // intersect have midpoints within distance 1, so a grid works; graphs with
  // longer edges fall back to the quadratic scan.
  std::vector<std::pair<int, int>> cand;
  if (max_len <= 1.25 && ne > 64) {
    const double cell = 1.3;
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    std::vector<std::pair<int, int>> cells(ne);
    for (int k = 0; k < ne; ++k) {
      const auto& [u, v] = g.edges[k];
      const double mx = (vs[u].x + vs[v].x) / 2.0, my = (vs[u].y + vs[v].y) / 2.0;
      cells[k] = {static_cast<int>(std::floor(mx / cell)),
                  static_cast<int>(std::floor(my / cell))};
      grid[cell_key(cells[k].first, cells[k].second)].push_back(k);
    }
    for (int k = 0; k < ne; ++k)
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy) {
          auto it = grid.find(cell_key(cells[k].first + dx, cells[k].second + dy));
          if (it == grid.end()) continue;
          for (int j : it->second)
            if (j > k) cand.emplace_back(k, j);
        }
    std::sort(cand.begin(), cand.end());
  } else {
    for (int k = 0; k < ne; ++k)
      for (int j = k + 1; j < ne; ++j) cand.emplace_back(k, j);
  }
  for (const auto& [k, j] : cand) {
    const auto& [a, b] = g.edges[k];
    const auto& [c, d] = g.edges[j];
    // cheap bounding-box reject
    if (std::min(vs[a].x, vs[b].x) > std::max(vs[c].x, vs[d].x) + tol.eps() ||
        std::min(vs[c].x, vs[d].x) > std::max(vs[a].x, vs[b].x) + tol.eps() ||
        std::min(vs[a].y, vs[b].y) > std::max(vs[c].y, vs[d].y) + tol.eps() ||
        std::min(vs[c].y, vs[d].y) > std::max(vs[a].y, vs[b].y) + tol.eps())
      continue;
    if (segments_properly_cross({vs[a], vs[b]}, {vs[c], vs[d]}, tol))
      result.violations.push_back({ViolationKind::EdgesCross, a, b, c, d, 0.0});
  }

  if (result.violations.empty())
    result.graph = MatchstickGraph(std::move(g), tol);
  return result;
}

MatchstickGraph MatchstickGraph::assume_valid(EmbeddedGraph g, Tolerance tol) {
  check_structure(g);
  return MatchstickGraph(std::move(g), tol);
}

bool FaceReport::is_bounded(int face_id) const {
  return std::find(outer_walks.begin(), outer_walks.end(), face_id) == outer_walks.end();
}

FaceReport extract_faces(const MatchstickGraph& m) {
  FaceReport report;
  const int ne = m.e();
  if (ne == 0) return report;

  const Rotation rot = Rotation::build(m);
  std::vector<char> visited(2 * ne, 0);
  std::vector<double> areas;

  for (int d0 = 0; d0 < 2 * ne; ++d0) {
    if (visited[d0]) continue;
    std::vector<int> walk;
    int d = d0;
    do {
      visited[d] = 1;
      walk.push_back(rot.origin(d, m));
      d = rot.next_in_face(d, m);
    } while (d != d0);
    areas.push_back(walk_signed_area(walk, m.vertices()));
    report.faces.push_back(std::move(walk));
  }

  // One outer walk per connected component: the walk of smallest signed area.
  Dsu dsu(m.n());
  for (const auto& [u, v] : m.edges()) dsu.unite(u, v);
  std::unordered_map<int, int> outer_of_component;
  for (std::size_t i = 0; i < report.faces.size(); ++i) {
    const int comp = dsu.find(report.faces[i][0]);
    auto it = outer_of_component.find(comp);
    if (it == outer_of_component.end() || areas[i] < areas[it->second])
      outer_of_component[comp] = static_cast<int>(i);
  }
  for (const auto& [comp, idx] : outer_of_component) report.outer_walks.push_back(idx);
  std::sort(report.outer_walks.begin(), report.outer_walks.end());
  report.outer_face = report.outer_walks.empty() ? -1 : report.outer_walks.front();
  for (int idx : report.outer_walks)
    if (areas[idx] < areas[report.outer_face]) report.outer_face = idx;

  for (std::size_t i = 0; i < report.faces.size(); ++i) {
    if (!report.is_bounded(static_cast<int>(i))) continue;
    const int size = distinct_count(report.faces[i]);
    ++report.f_hist[size];
    ++report.f;
    if (size == 3)
      ++report.f3;
    else
      ++report.g;
  }
  return report;
}

bool euler_check(const MatchstickGraph& m) {
  if (component_count(m) != 1) throw NotConnectedError{};
  const FaceReport fr = extract_faces(m);
  return static_cast<long long>(m.n()) - m.e() + fr.f == 1;
}

BlockDecomposition blocks(const MatchstickGraph& m) {
  BlockDecomposition out;
  const int n = m.n();
  out.is_connected = n == 0 || component_count(m) == 1;

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (nbr, edge id)
  for (int k = 0; k < m.e(); ++k) {
    const auto [u, v] = m.edges()[k];
    adj[u].emplace_back(v, k);
    adj[v].emplace_back(u, k);
  }

  std::vector<int> disc(n, -1), low(n, 0), it(n, 0), parent_edge(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<int> edge_stack;
  int timer = 0;

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    int root_children = 0;
    std::vector<int> stack = {root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int u = stack.back();
      if (it[u] < static_cast<int>(adj[u].size())) {
        const auto [w, eid] = adj[u][it[u]++];
        if (eid == parent_edge[u]) continue;
        if (disc[w] == -1) {
          edge_stack.push_back(eid);
          disc[w] = low[w] = timer++;
          parent_edge[w] = eid;
          if (u == root) ++root_children;
          stack.push_back(w);
        } else if (disc[w] < disc[u]) {
          edge_stack.push_back(eid);
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        const int p = stack.back();
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          if (p != root || root_children > 1) is_cut[p] = 1;
          // pop the block ending with the tree edge p->u
          std::vector<int> block;
          while (!edge_stack.empty()) {
            const int eid = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(eid);
            if (eid == parent_edge[u]) break;
          }
          std::sort(block.begin(), block.end());
          out.blocks.push_back(std::move(block));
        }
      }
    }
  }

  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  std::sort(out.blocks.begin(), out.blocks.end());
  out.is_biconnected = out.is_connected && out.cut_vertices.empty() && n >= 3;
  return out;
}

namespace {

BoundaryProfile profile_impl(const MatchstickGraph& m, const FaceReport& fr) {
  BoundaryProfile prof;
  const auto& outer = fr.faces[fr.outer_face];
  prof.cycle.assign(outer.rbegin(), outer.rend());  // counterclockwise
  prof.b = static_cast<int>(prof.cycle.size());
  if (distinct_count(prof.cycle) != prof.b)
    throw PreconditionError("outer face is not a simple cycle");

  const auto deg = vertex_degrees(m);
  std::vector<int> cycle_pos(m.n(), -1);
  for (int i = 0; i < prof.b; ++i) cycle_pos[prof.cycle[i]] = i;
  for (int v : prof.cycle) ++prof.degree_hist[deg[v]];

  for (std::size_t i = 0; i < fr.faces.size(); ++i) {
    if (!fr.is_bounded(static_cast<int>(i)) || distinct_count(fr.faces[i]) < 4) continue;
    for (int v : fr.faces[i])
      if (cycle_pos[v] >= 0) {
        ++prof.nontriangular_touching;
        break;
      }
  }

  for (const auto& [u, v] : m.edges()) {
    if (cycle_pos[u] < 0 || cycle_pos[v] < 0) continue;
    const int gap = std::abs(cycle_pos[u] - cycle_pos[v]);
    if (gap != 1 && gap != prof.b - 1) {
      prof.has_chord = true;
      break;
    }
  }

  prof.area = std::abs(walk_signed_area(prof.cycle, m.vertices()));
  return prof;
}

void require_biconnected(const MatchstickGraph& m) {
  if (!blocks(m).is_biconnected) throw NotBiconnectedError{};
}

}  // namespace

BoundaryProfile boundary_profile(const MatchstickGraph& m) {
  require_biconnected(m);
  return profile_impl(m, extract_faces(m));
}

bool double_count_check(const MatchstickGraph& m) {
  require_biconnected(m);
  const FaceReport fr = extract_faces(m);
  const BoundaryProfile prof = profile_impl(m, fr);
  long long slack = 0;
  for (const auto& [size, count] : fr.f_hist)
    if (size >= 4) slack += static_cast<long long>(size - 3) * count;
  return m.e() == 3LL * m.n() - 3 - prof.b - slack;
}

bool angle_sum_check(const MatchstickGraph& m) {
  require_biconnected(m);
  const BoundaryProfile prof = profile_impl(m, extract_faces(m));
  const auto& vs = m.vertices();
  const int b = prof.b;
  double sum_deg = 0.0;
  for (int i = 0; i < b; ++i) {
    const auto& prev = vs[prof.cycle[(i + b - 1) % b]];
    const auto& cur = vs[prof.cycle[i]];
    const auto& next = vs[prof.cycle[(i + 1) % b]];
    const double ax = prev.x - cur.x, ay = prev.y - cur.y;
    const double wx = next.x - cur.x, wy = next.y - cur.y;
    double theta = std::atan2(wx * ay - wy * ax, wx * ax + wy * ay);
    if (theta <= 0) theta += 2 * std::numbers::pi;
    sum_deg += theta * 180.0 / std::numbers::pi;
  }
  const double target = 180.0 * (b - 2);
  return std::abs(sum_deg - target) <= 1e-6 * target;
}

bool isoperimetric_check(const MatchstickGraph& m) {
  require_biconnected(m);
  const FaceReport fr = extract_faces(m);
  const BoundaryProfile prof = profile_impl(m, fr);
  const double b2 = static_cast<double>(prof.b) * prof.b;
  return b2 >= 4.0 * std::numbers::pi * prof.area &&
         b2 > std::numbers::pi * std::sqrt(3.0) * static_cast<double>(fr.f3);
}

bool boundary_angle_count_check(const MatchstickGraph& m) {
  if (!blocks(m).is_biconnected) throw PreconditionError("graph is not 2-connected");
  const FaceReport fr = extract_faces(m);
  const BoundaryProfile prof = profile_impl(m, fr);
  if (prof.has_chord) throw PreconditionError("boundary cycle has a chord");

  std::vector<char> on_boundary(m.n(), 0);
  for (int v : prof.cycle) on_boundary[v] = 1;
  std::set<std::pair<int, int>> edge_set;
  for (const auto& [u, v] : m.edges()) edge_set.insert(std::minmax(u, v));

  for (std::size_t i = 0; i < fr.faces.size(); ++i) {
    if (!fr.is_bounded(static_cast<int>(i)) || distinct_count(fr.faces[i]) < 4) continue;
    std::vector<int> shared;
    for (int v : fr.faces[i])
      if (on_boundary[v]) shared.push_back(v);
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    if (shared.size() > 2)
      throw PreconditionError("a non-triangular face shares more than two vertices with the boundary");
    if (shared.size() == 2 && !edge_set.count(std::minmax(shared[0], shared[1])))
      throw PreconditionError("a non-triangular face shares two non-adjacent vertices with the boundary");
  }

  long long angles = 0;
  for (const auto& [degree, count] : prof.degree_hist)
    angles += static_cast<long long>(degree - 1) * count;
  return angles - prof.nontriangular_touching <= 3LL * prof.b - 6;
}

PeelResult boundary_peel(const MatchstickGraph& m) {
  require_biconnected(m);
  const FaceReport fr = extract_faces(m);
  const BoundaryProfile prof = profile_impl(m, fr);
  if (prof.has_chord) throw HasChordError{};

  std::vector<char> on_boundary(m.n(), 0);
  for (int v : prof.cycle) on_boundary[v] = 1;

  PeelResult out;
  std::vector<int> new_index(m.n(), -1);
  for (int v = 0; v < m.n(); ++v) {
    if (on_boundary[v]) continue;
    new_index[v] = static_cast<int>(out.kept_vertices.size());
    out.kept_vertices.push_back(v);
    out.remainder.vertices.push_back(m.vertices()[v]);
  }
  for (const auto& [u, v] : m.edges())
    if (new_index[u] >= 0 && new_index[v] >= 0)
      out.remainder.edges.emplace_back(new_index[u], new_index[v]);

  out.removed_edges = m.e() - static_cast<long long>(out.remainder.edges.size());
  long long expected = 0;
  for (const auto& [degree, count] : prof.degree_hist)
    expected += static_cast<long long>(degree - 1) * count;
  if (out.removed_edges != expected)
    throw std::logic_error("peel identity violated on a chord-free boundary");
  out.removed_nontriangular_faces = prof.nontriangular_touching;
  return out;
}

}  // namespace matchstick

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchstick/geometry.hpp"

namespace matchstick {

// Straight-line embedded graph prior to validation. Edges are unordered index
// pairs; structural invariants (indices in range, i != j, no duplicate edge)
// are enforced by every operation that consumes one.
struct EmbeddedGraph {
  std::vector<PlanePoint> vertices;
  std::vector<std::pair<int, int>> edges;
};

// Throws std::invalid_argument if the structural invariants fail.
void check_structure(const EmbeddedGraph& g);

enum class ViolationKind { NonUnitEdge, EdgesCross, DuplicateVertices };

struct Violation {
  ViolationKind kind;
  // NonUnitEdge: (a,b) = vertex indices of the edge, measured = its length.
  // EdgesCross: (a,b) and (c,d) = the two edges.
  // DuplicateVertices: (a,b) = the vertex indices, measured = their distance.
  int a = -1, b = -1, c = -1, d = -1;
  double measured = 0.0;

  std::string to_string() const;
};

struct ValidationResult;

// An embedded graph for which the matchstick guarantees hold: unit edges,
// no proper crossings, no coincident vertices. Immutable once built.
class MatchstickGraph {
 public:
  // Wraps a graph the caller can guarantee is valid (e.g. exact lattice
  // constructions whose validity is forced by the generation rule).
  // Structural invariants are still checked.
  static MatchstickGraph assume_valid(EmbeddedGraph g, Tolerance tol = Tolerance{});

  const EmbeddedGraph& graph() const { return g_; }
  const std::vector<PlanePoint>& vertices() const { return g_.vertices; }
  const std::vector<std::pair<int, int>>& edges() const { return g_.edges; }
  int n() const { return static_cast<int>(g_.vertices.size()); }
  int e() const { return static_cast<int>(g_.edges.size()); }
  Tolerance tol() const { return tol_; }

 private:
  MatchstickGraph(EmbeddedGraph g, Tolerance tol) : g_(std::move(g)), tol_(tol) {}
  friend ValidationResult validate(EmbeddedGraph, Tolerance);

  EmbeddedGraph g_;
  Tolerance tol_;
};

struct ValidationResult {
  std::optional<MatchstickGraph> graph;  // engaged iff violations is empty
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every edge for unit length, every edge pair for proper crossings and
// every vertex pair for coincidence. Collects the full violation list.
ValidationResult validate(EmbeddedGraph g, Tolerance tol = Tolerance{});

struct NotConnectedError : std::runtime_error {
  NotConnectedError() : std::runtime_error("graph is not connected") {}
};
struct NotBiconnectedError : std::runtime_error {
  NotBiconnectedError() : std::runtime_error("graph is not 2-connected") {}
};
struct HasChordError : std::runtime_error {
  HasChordError() : std::runtime_error("boundary cycle has a chord") {}
};
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& reason)
      : std::runtime_error("precondition failed: " + reason) {}
};

// Faces of the embedding. Walks are traced with the bounded side on the left,
// so bounded faces come out counterclockwise (positive signed area) and each
// component's outer walk clockwise.
struct FaceReport {
  std::vector<std::vector<int>> faces;  // vertex sequence of every traced walk
  std::vector<int> outer_walks;         // one per connected component
  int outer_face = -1;                  // the globally outermost walk
  std::map<int, int> f_hist;            // bounded faces by distinct vertex count
  long long f = 0;                      // total bounded faces
  long long f3 = 0;                     // bounded triangular faces
  long long g = 0;                      // bounded non-triangular faces

  bool is_bounded(int face_id) const;
};

FaceReport extract_faces(const MatchstickGraph& m);

// n - e + f == 1 for the connected graph. Throws NotConnectedError.
bool euler_check(const MatchstickGraph& m);

// e == 3n - 3 - b - sum_{i>=4} (i-3) f_i, exactly. Throws NotBiconnectedError.
bool double_count_check(const MatchstickGraph& m);

struct BoundaryProfile {
  std::vector<int> cycle;        // outer cycle, counterclockwise
  int b = 0;                     // boundary vertex count
  std::map<int, int> degree_hist;  // boundary vertices by graph degree
  int nontriangular_touching = 0;  // bounded non-triangular faces meeting the boundary
  bool has_chord = false;
  double area = 0.0;             // polygon area of the boundary cycle
};

BoundaryProfile boundary_profile(const MatchstickGraph& m);  // throws NotBiconnectedError

// sum_{i>=2} (i-1) b_i - g_b <= 3b - 6, valid when the boundary cycle is
// chord-free and every bounded non-triangular face meets the boundary in at
// most two adjacent vertices. Throws PreconditionError naming the failure.
bool boundary_angle_count_check(const MatchstickGraph& m);

// Measured interior angles of the boundary polygon sum to 180(b-2) degrees
// within 1e-6 relative error. Throws NotBiconnectedError.
bool angle_sum_check(const MatchstickGraph& m);

// b^2 >= 4*pi*A for the boundary polygon and b^2 > pi*sqrt(3)*f3.
// Throws NotBiconnectedError.
bool isoperimetric_check(const MatchstickGraph& m);

struct BlockDecomposition {
  std::vector<int> cut_vertices;
  std::vector<std::vector<int>> blocks;  // edge-index sets, partitioning edges
  bool is_connected = false;
  bool is_biconnected = false;
};

BlockDecomposition blocks(const MatchstickGraph& m);

struct PeelResult {
  EmbeddedGraph remainder;              // induced graph on interior vertices
  std::vector<int> kept_vertices;       // remainder index -> original index
  long long removed_edges = 0;          // equals sum (i-1) b_i when chord-free
  long long removed_nontriangular_faces = 0;  // g_b
};

// Removes the boundary cycle with all incident edges.
// Throws NotBiconnectedError / HasChordError.
PeelResult boundary_peel(const MatchstickGraph& m);

}  // namespace matchstick

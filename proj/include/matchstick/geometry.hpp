#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

namespace matchstick {

// Point of the triangular lattice, written in the basis (1,0), (1/2, sqrt(3)/2).
// Two lattice points are unit distance apart iff the delta has Eisenstein norm 1,
// i.e. (da,db) in {(+-1,0),(0,+-1),(1,-1),(-1,1)}.
struct LatticePoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Squared Euclidean distance between lattice points, as an exact integer:
// |p-q|^2 = da^2 + da*db + db^2.
std::int64_t lattice_dist2(LatticePoint p, LatticePoint q);

// Exact unit-distance test.
bool lattice_unit(LatticePoint p, LatticePoint q);

// Sign of the cross product (q-p) x (r-p); exact. Positive = counterclockwise.
int lattice_orient(LatticePoint p, LatticePoint q, LatticePoint r);

// The six unit steps of the lattice, in counterclockwise order starting from (1,0).
inline constexpr LatticePoint kUnitSteps[6] = {
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};

// A vertex position. Unit of length = one matchstick. When `exact` is set the
// cartesian coordinates are its image and predicates run in integer arithmetic.
struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
  std::optional<LatticePoint> exact;
};

PlanePoint lattice_to_cartesian(LatticePoint p);

// Comparison tolerance for imported floating coordinates. Must stay well below
// the unit length so near-unit edges remain distinguishable.
class Tolerance {
 public:
  explicit Tolerance(double eps = 1e-9);
  double eps() const { return eps_; }

 private:
  double eps_;
};

// |dist(p,q) - 1| <= eps; exact integer test when both points carry lattice
// coordinates.
bool is_unit_length(const PlanePoint& p, const PlanePoint& q, Tolerance tol);

using Segment = std::pair<PlanePoint, PlanePoint>;

// True iff the closed segments share a point that is not a common endpoint of
// both. Collinear overlap of positive length counts as a crossing, as does an
// endpoint touching the interior of the other segment. Endpoints within eps of
// each other are treated as coincident; orientation determinants with
// |det| <= eps are treated as collinear.
bool segments_properly_cross(const Segment& s1, const Segment& s2, Tolerance tol);

}  // namespace matchstick

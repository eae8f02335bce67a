#include "matchstick/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchstick {

namespace {
constexpr double kSqrt3Half = 0.8660254037844386467637231707529362;

int sign_of(std::int64_t v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }
}  // namespace

std::int64_t lattice_dist2(LatticePoint p, LatticePoint q) {
  const std::int64_t da = p.a - q.a;
  const std::int64_t db = p.b - q.b;
  return da * da + da * db + db * db;
}

bool lattice_unit(LatticePoint p, LatticePoint q) {
  return lattice_dist2(p, q) == 1;
}

int lattice_orient(LatticePoint p, LatticePoint q, LatticePoint r) {
  // The cartesian cross product equals sqrt(3)/2 * (da1*db2 - db1*da2),
  // so the sign is decided by the integer part alone.
  const std::int64_t da1 = q.a - p.a, db1 = q.b - p.b;
  const std::int64_t da2 = r.a - p.a, db2 = r.b - p.b;
  return sign_of(da1 * db2 - db1 * da2);
}

PlanePoint lattice_to_cartesian(LatticePoint p) {
  PlanePoint out;
  out.x = static_cast<double>(p.a) + static_cast<double>(p.b) / 2.0;
  out.y = static_cast<double>(p.b) * kSqrt3Half;
  out.exact = p;
  return out;
}

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps >= 0.0) || eps >= 0.05)
    throw std::invalid_argument("tolerance must satisfy 0 <= eps < 0.05");
}

bool is_unit_length(const PlanePoint& p, const PlanePoint& q, Tolerance tol) {
  if (p.exact && q.exact) return lattice_unit(*p.exact, *q.exact);
  const double d = std::hypot(p.x - q.x, p.y - q.y);
  return std::abs(d - 1.0) <= tol.eps();
}

namespace {

// The crossing test is written once against a kernel supplying orientation,
// point coincidence and a 1-d projection; instantiated exactly for lattice
// points and with eps-snapped doubles otherwise.

struct ExactKernel {
  LatticePoint pt[4];

  int orient(int i, int j, int k) const {
    return lattice_orient(pt[i], pt[j], pt[k]);
  }
  bool coincident(int i, int j) const { return pt[i] == pt[j]; }
  // 2 * (pt[k]-pt[i]) . (pt[j]-pt[i]); integer valued in this basis.
  std::int64_t proj(int i, int j, int k) const {
    const std::int64_t ua = pt[k].a - pt[i].a, ub = pt[k].b - pt[i].b;
    const std::int64_t va = pt[j].a - pt[i].a, vb = pt[j].b - pt[i].b;
    return 2 * ua * va + ua * vb + ub * va + 2 * ub * vb;
  }
};

struct FloatKernel {
  double x[4], y[4];
  double eps;

  int orient(int i, int j, int k) const {
    const double det = (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i]);
    if (std::abs(det) <= eps) return 0;
    return det > 0 ? 1 : -1;
  }
  bool coincident(int i, int j) const {
    if (x[i] == x[j] && y[i] == y[j]) return true;
    return std::hypot(x[i] - x[j], y[i] - y[j]) < eps;
  }
  double proj(int i, int j, int k) const {
    return (x[k] - x[i]) * (x[j] - x[i]) + (y[k] - y[i]) * (y[j] - y[i]);
  }
};

// Indices: segment one is (0,1), segment two is (2,3).
template <class Kernel>
bool cross_impl(const Kernel& k) {
  const int o1 = k.orient(2, 3, 0);
  const int o2 = k.orient(2, 3, 1);
  const int o3 = k.orient(0, 1, 2);
  const int o4 = k.orient(0, 1, 3);

  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // interiors cross

  if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
    // All four points collinear: positive-length overlap is a crossing,
    // a single shared point can only be an endpoint of both.
    const auto tb = k.proj(0, 1, 1);
    auto tc = k.proj(0, 1, 2);
    auto td = k.proj(0, 1, 3);
    if (tc > td) std::swap(tc, td);
    const auto lo = std::max<decltype(tb)>(tc, 0);
    const auto hi = std::min<decltype(tb)>(td, tb);
    return lo < hi;
  }

  // Endpoint of one segment in the interior of the other.
  const auto on_segment = [&](int i, int j, int p) {
    if (k.orient(i, j, p) != 0) return false;
    const auto t = k.proj(i, j, p);
    return t >= 0 && t <= k.proj(i, j, j);
  };
  for (int p : {0, 1}) {
    if (on_segment(2, 3, p) && !k.coincident(p, 2) && !k.coincident(p, 3))
      return true;
  }
  for (int p : {2, 3}) {
    if (on_segment(0, 1, p) && !k.coincident(p, 0) && !k.coincident(p, 1))
      return true;
  }
  return false;
}

}  // namespace

bool segments_properly_cross(const Segment& s1, const Segment& s2, Tolerance tol) {
  const PlanePoint* p[4] = {&s1.first, &s1.second, &s2.first, &s2.second};
  if (p[0]->exact && p[1]->exact && p[2]->exact && p[3]->exact) {
    ExactKernel k{{*p[0]->exact, *p[1]->exact, *p[2]->exact, *p[3]->exact}};
    return cross_impl(k);
  }
  FloatKernel k{};
  for (int i = 0; i < 4; ++i) {
    k.x[i] = p[i]->x;
    k.y[i] = p[i]->y;
  }
  k.eps = tol.eps();
  return cross_impl(k);
}

}  // namespace matchstick

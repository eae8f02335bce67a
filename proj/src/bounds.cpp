#include "matchstick/bounds.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "matchstick/interval.hpp"

namespace matchstick {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + " must be >= 1");
}

// floor(3m - sqrt(12m-3)) in integers. Since ceil_isqrt returns the exact
// root whenever 12m-3 is a perfect square, 3m - ceil_isqrt(12m-3) covers the
// exact and the irrational case alike.
std::int64_t three_m_minus_root_floor(std::int64_t m) {
  return 3 * m - ceil_isqrt(12 * m - 3);
}

constexpr mpfr_prec_t kPrecLadder[] = {96, 192, 384, 768, 1536};

// c * sqrt(n - 1/4) at the given precision.
Interval scaled_root(std::int64_t n, mpfr_prec_t prec) {
  const Interval three = Interval::from_int(3, prec);
  const Interval c =
      (Interval::from_int(12, prec).sqrt() +
       (Interval::from_int(2, prec) * Interval::pi(prec) * three.sqrt()).sqrt()) /
      Interval::from_int(2, prec);
  return c * (Interval::from_ratio(4 * n - 1, 4, prec)).sqrt();
}

}  // namespace

std::int64_t floor_isqrt(std::int64_t m) {
  if (m < 0) throw std::domain_error("isqrt of a negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  // fix up the floating seed; wide arithmetic so m near 2^63 cannot overflow
  while (r > 0 && static_cast<__int128>(r) * r > m) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::int64_t ceil_isqrt(std::int64_t m) {
  require_positive(m, "ceil_isqrt argument");
  const std::int64_t r = floor_isqrt(m);
  return r * r == m ? r : r + 1;
}

std::int64_t conjectured_max_edges(std::int64_t n) {
  require_positive(n, "vertex count");
  return 3 * n - ceil_isqrt(12 * n - 3);
}

bool edge_bound_holds(std::int64_t n, std::int64_t e, std::int64_t g) {
  require_positive(n, "vertex count");
  if (e < 0 || g < 0) throw std::domain_error("negative edge or face count");
  const std::int64_t slack = 3 * n + g - e;
  return slack >= 0 && slack * slack >= 12 * n - 3;
}

std::int64_t edge_bound_floor(std::int64_t n, std::int64_t g) {
  require_positive(n, "vertex count");
  return three_m_minus_root_floor(n) + g;
}

std::int64_t max_triangular_faces(std::int64_t n) {
  require_positive(n, "vertex count");
  return 2 * n + 1 - ceil_isqrt(12 * n - 3);
}

ConstantBracket edge_bound_constant() {
  const mpfr_prec_t prec = 192;
  const Interval c =
      (Interval::from_int(12, prec).sqrt() +
       (Interval::from_int(2, prec) * Interval::pi(prec) *
        Interval::from_int(3, prec).sqrt())
           .sqrt()) /
      Interval::from_int(2, prec);
  ConstantBracket out;
  out.lower = c.lo_double();
  out.upper = c.hi_double();
  out.value = (out.lower + out.upper) / 2.0;
  return out;
}

std::int64_t isoperimetric_max_edges(std::int64_t n) {
  require_positive(n, "vertex count");
  for (const mpfr_prec_t prec : kPrecLadder) {
    const Interval rhs = Interval::from_int(3 * n, prec) - scaled_root(n, prec);
    if (const auto fl = rhs.floor_if_unambiguous()) return *fl;
  }
  throw AmbiguousFloorError(n);
}

std::vector<std::int64_t> settled_list(std::int64_t n_max) {
  require_positive(n_max, "n_max");
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= n_max; ++n)
    if (isoperimetric_max_edges(n) == conjectured_max_edges(n)) out.push_back(n);
  return out;
}

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(num * rhs.den + rhs.num * den, den * rhs.den);
}

Rational Rational::operator*(const Rational& rhs) const {
  return Rational(num * rhs.num, den * rhs.den);
}

SqrtSumResult sqrt_sum_check(Rational alpha, Rational beta, Rational gamma,
                             Rational delta) {
  if (alpha.num < 0 || beta.num < 0 || gamma.num < 0 || delta.num < 0)
    throw PreconditionError("inputs must be non-negative");
  if (!(beta <= alpha && alpha <= gamma))
    throw PreconditionError("requires beta <= alpha <= gamma");
  if (!(alpha + delta == beta + gamma))
    throw PreconditionError("requires alpha + delta == beta + gamma");
  // Squaring both sides twice reduces the comparison to alpha*delta >= beta*gamma.
  SqrtSumResult out;
  out.holds = !(alpha * delta < beta * gamma);
  out.equality = alpha == beta || alpha == gamma;
  return out;
}

bool split_floor_check(std::int64_t n, std::int64_t n1, std::int64_t n2) {
  if (n1 < 3 || n2 < 3) throw PreconditionError("requires n1, n2 >= 3");
  if (n1 + n2 != n + 2) throw PreconditionError("requires n1 + n2 == n + 2");
  return three_m_minus_root_floor(n) + 1 >=
         three_m_minus_root_floor(n1) + three_m_minus_root_floor(n2);
}

bool constant_inequalities_hold() {
  // sqrt(69) + sqrt(33) - 9 > 5  <=>  sqrt(69*33) > 47  (after squaring twice)
  const bool ineq1 = 69 * 33 > 47 * 47;
  // sqrt(45) - sqrt(33) < 1  <=>  11 < 2*sqrt(33)  <=>  121 < 132
  const bool ineq2 = 11 * 11 < 4 * 33;
  if (!ineq1 || !ineq2) return false;

  const mpfr_prec_t prec = 192;
  const Interval two = Interval::from_int(2, prec);
  const Interval three = Interval::from_int(3, prec);
  const Interval six = Interval::from_int(6, prec);
  const Interval pi = Interval::pi(prec);
  const Interval sqrt3 = three.sqrt();
  const Interval c = (Interval::from_int(12, prec).sqrt() + (two * pi * sqrt3).sqrt()) /
                     two;

  // sqrt(5)/2 - sqrt(2) + sqrt(3/2) > 3/c
  const Interval lhs3 = Interval::from_int(5, prec).sqrt() / two - two.sqrt() +
                        Interval::from_ratio(3, 2, prec).sqrt();
  if (!lhs3.definitely_gt(three / c)) return false;

  // pi*sqrt(3) + 6 - c*sqrt(2*pi*sqrt(3)) > 0
  const Interval head = pi * sqrt3 + six - c * (two * pi * sqrt3).sqrt();
  if (!head.definitely_positive()) return false;

  // (pi*sqrt(3) + 6 - c*sqrt(2*pi*sqrt(3))) * (pi*sqrt(3)/2 + 3) >= 9 - 3*pi*sqrt(3)/2
  const Interval lhs5 = head * (pi * sqrt3 / two + three);
  const Interval rhs5 =
      Interval::from_int(9, prec) - three * pi * sqrt3 / two;
  return lhs5.definitely_ge(rhs5);
}

std::optional<std::pair<std::int64_t, std::int64_t>> boundary_removal_bound_sweep(
    std::int64_t n_max) {
  for (std::int64_t n = 4; n <= n_max; ++n) {
    for (std::int64_t b = 3; (b + 3) * (b + 3) <= 12 * n - 3; ++b) {
      // sqrt(12n-3) <= sqrt(12(n-b)-3) + 6  <=>  (b-3)^2 <= 12(n-b)-3 for b > 3
      if (b > 3 && (b - 3) * (b - 3) > 12 * (n - b) - 3) return std::make_pair(n, b);
    }
  }
  return std::nullopt;
}

bool BoundsReport::all_pass() const {
  for (const auto& [name, ok] : verdicts)
    if (!ok) return false;
  return true;
}

BoundsReport full_report(const MatchstickGraph& m) {
  const FaceReport fr = extract_faces(m);
  BoundsReport rep;
  rep.n = m.n();
  rep.e = m.e();
  rep.g = fr.g;
  rep.f3 = fr.f3;
  rep.conjectured_max = conjectured_max_edges(rep.n);
  rep.edge_bound = edge_bound_floor(rep.n, rep.g);
  rep.iso_bound = isoperimetric_max_edges(rep.n);
  rep.max_triangles = max_triangular_faces(rep.n);
  rep.verdicts.emplace_back("edge_bound", edge_bound_holds(rep.n, rep.e, rep.g));
  rep.verdicts.emplace_back("iso_bound", rep.e <= rep.iso_bound);
  rep.verdicts.emplace_back("triangle_bound", rep.f3 <= rep.max_triangles);
  rep.verdicts.emplace_back("conjecture", rep.e <= rep.conjectured_max);
  return rep;
}

}  // namespace matchstick

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchstick/planegraph.hpp"

namespace matchstick {

struct AmbiguousFloorError : std::runtime_error {
  std::int64_t n;
  explicit AmbiguousFloorError(std::int64_t value)
      : std::runtime_error("certified enclosure straddles an integer at n=" +
                           std::to_string(value)),
        n(value) {}
};

// Largest k with k*k <= m. Requires m >= 0.
std::int64_t floor_isqrt(std::int64_t m);

// Smallest k with k*k >= m. Requires m >= 1; pure integer arithmetic.
std::int64_t ceil_isqrt(std::int64_t m);

// 3n - ceil(sqrt(12n-3)): the established maximum for penny graphs and the
// conjectured maximum for matchstick graphs. Requires n >= 1.
std::int64_t conjectured_max_edges(std::int64_t n);

// e <= 3n - sqrt(12n-3) + g, decided exactly by integer squaring.
bool edge_bound_holds(std::int64_t n, std::int64_t e, std::int64_t g);

// floor(3n + g - sqrt(12n-3)), exact.
std::int64_t edge_bound_floor(std::int64_t n, std::int64_t g);

// floor(2n + 1 - sqrt(12n-3)): sharp cap on bounded triangular faces.
std::int64_t max_triangular_faces(std::int64_t n);

// The constant c = (sqrt(12) + sqrt(2*pi*sqrt(3)))/2 of the isoperimetric
// edge bound, with a certified enclosure.
struct ConstantBracket {
  double value;
  double lower;
  double upper;
};
ConstantBracket edge_bound_constant();

// floor(3n - c*sqrt(n - 1/4)), evaluated with directed rounding at increasing
// precision. Throws AmbiguousFloorError if the enclosure never resolves.
std::int64_t isoperimetric_max_edges(std::int64_t n);

// All n <= n_max where the isoperimetric bound pins the maximum to the
// conjectured value.
std::vector<std::int64_t> settled_list(std::int64_t n_max);

// Exact non-negative rational, normalized with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // normalizes; throws on d == 0

  friend bool operator==(const Rational&, const Rational&);
  friend bool operator<(const Rational&, const Rational&);
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  Rational operator+(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
};

// sqrt(beta) + sqrt(gamma) <= sqrt(alpha) + sqrt(delta) under the premises
// beta <= alpha <= gamma and alpha + delta == beta + gamma, decided exactly
// via alpha*delta >= beta*gamma. Equality iff alpha == beta or alpha == gamma.
struct SqrtSumResult {
  bool holds;
  bool equality;
};
SqrtSumResult sqrt_sum_check(Rational alpha, Rational beta, Rational gamma,
                             Rational delta);  // throws PreconditionError

// floor(3n - sqrt(12n-3)) + 1 >= floor(3n1 - sqrt(12n1-3)) + floor(3n2 - sqrt(12n2-3))
// for n1, n2 >= 3 with n1 + n2 == n + 2; exact floors.
bool split_floor_check(std::int64_t n, std::int64_t n1, std::int64_t n2);

// The five fixed inequalities the bound derivations rest on, each certified:
// the two algebraic ones by integer squaring, the three involving pi and c by
// interval enclosure.
bool constant_inequalities_hold();

// sqrt(12n-3) <= sqrt(12(n-b)-3) + 6 for all 4 <= n <= n_max and
// 3 <= b <= sqrt(12n-3) - 3, decided in integers. Returns the first failing
// (n, b) pair, or nullopt when the whole range holds.
std::optional<std::pair<std::int64_t, std::int64_t>> boundary_removal_bound_sweep(
    std::int64_t n_max);

struct BoundsReport {
  long long n = 0;
  long long e = 0;
  long long g = 0;
  long long f3 = 0;
  long long conjectured_max = 0;
  long long edge_bound = 0;   // floor(3n + g - sqrt(12n-3))
  long long iso_bound = 0;    // floor(3n - c*sqrt(n-1/4))
  long long max_triangles = 0;
  std::vector<std::pair<std::string, bool>> verdicts;

  bool all_pass() const;
};

// Evaluates every bound against the graph's n, e, g, f3.
BoundsReport full_report(const MatchstickGraph& m);

}  // namespace matchstick

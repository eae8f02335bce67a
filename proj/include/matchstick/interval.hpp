#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>

namespace matchstick {

// Closed interval [lo, hi] with directed-rounding endpoints. Every operation
// rounds lo down and hi up, so any real produced by composing operations on
// enclosed inputs stays enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other);
  ~Interval();

  static Interval from_int(std::int64_t v, mpfr_prec_t prec);
  static Interval from_ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  Interval operator+(const Interval& rhs) const;
  Interval operator-(const Interval& rhs) const;
  Interval operator*(const Interval& rhs) const;
  Interval operator/(const Interval& rhs) const;  // rhs must not straddle zero
  Interval sqrt() const;                          // requires hi >= 0; lo clamped at 0

  double lo_double() const;  // rounded down
  double hi_double() const;  // rounded up

  bool definitely_gt(const Interval& rhs) const;  // lo > rhs.hi
  bool definitely_ge(const Interval& rhs) const;  // lo >= rhs.hi
  bool definitely_positive() const;

  // Engaged iff floor(lo) == floor(hi).
  std::optional<std::int64_t> floor_if_unambiguous() const;

  mpfr_prec_t prec() const { return prec_; }

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace matchstick

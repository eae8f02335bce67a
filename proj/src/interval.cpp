#include "matchstick/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace matchstick {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_int(std::int64_t v, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_si(out.lo_, static_cast<long>(v), MPFR_RNDD);
  mpfr_set_si(out.hi_, static_cast<long>(v), MPFR_RNDU);
  return out;
}

Interval Interval::from_ratio(std::int64_t num, std::int64_t den, mpfr_prec_t prec) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return from_int(num, prec) / from_int(den, prec);
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::operator+(const Interval& rhs) const {
  Interval out(std::max(prec_, rhs.prec_));
  mpfr_add(out.lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(out.hi_, hi_, rhs.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::operator-(const Interval& rhs) const {
  Interval out(std::max(prec_, rhs.prec_));
  mpfr_sub(out.lo_, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(out.hi_, hi_, rhs.lo_, MPFR_RNDU);
  return out;
}

Interval Interval::operator*(const Interval& rhs) const {
  Interval out(std::max(prec_, rhs.prec_));
  // lo = min of the four endpoint products rounded down, hi = max rounded up.
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  const mpfr_srcptr ls[2] = {lo_, hi_};
  const mpfr_srcptr rs[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (auto l : ls)
    for (auto r : rs) {
      mpfr_mul(t, l, r, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_mul(t, l, r, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval Interval::operator/(const Interval& rhs) const {
  if (mpfr_sgn(rhs.lo_) <= 0 && mpfr_sgn(rhs.hi_) >= 0)
    throw std::domain_error("interval division by a range containing zero");
  Interval out(std::max(prec_, rhs.prec_));
  mpfr_t t;
  mpfr_init2(t, out.prec_);
  const mpfr_srcptr ls[2] = {lo_, hi_};
  const mpfr_srcptr rs[2] = {rhs.lo_, rhs.hi_};
  bool first = true;
  for (auto l : ls)
    for (auto r : rs) {
      mpfr_div(t, l, r, MPFR_RNDD);
      if (first || mpfr_cmp(t, out.lo_) < 0) mpfr_set(out.lo_, t, MPFR_RNDD);
      mpfr_div(t, l, r, MPFR_RNDU);
      if (first || mpfr_cmp(t, out.hi_) > 0) mpfr_set(out.hi_, t, MPFR_RNDU);
      first = false;
    }
  mpfr_clear(t);
  return out;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) throw std::domain_error("sqrt of a negative interval");
  Interval out(prec_);
  if (mpfr_sgn(lo_) <= 0)
    mpfr_set_zero(out.lo_, 1);
  else
    mpfr_sqrt(out.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(out.hi_, hi_, MPFR_RNDU);
  return out;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool Interval::definitely_gt(const Interval& rhs) const {
  return mpfr_cmp(lo_, rhs.hi_) > 0;
}

bool Interval::definitely_ge(const Interval& rhs) const {
  return mpfr_cmp(lo_, rhs.hi_) >= 0;
}

bool Interval::definitely_positive() const { return mpfr_sgn(lo_) > 0; }

std::optional<std::int64_t> Interval::floor_if_unambiguous() const {
  mpfr_t flo, fhi;
  mpfr_init2(flo, prec_);
  mpfr_init2(fhi, prec_);
  mpfr_floor(flo, lo_);
  mpfr_floor(fhi, hi_);
  std::optional<std::int64_t> out;
  if (mpfr_cmp(flo, fhi) == 0 && mpfr_fits_slong_p(flo, MPFR_RNDD))
    out = static_cast<std::int64_t>(mpfr_get_si(flo, MPFR_RNDD));
  mpfr_clear(flo);
  mpfr_clear(fhi);
  return out;
}

}  // namespace matchstick

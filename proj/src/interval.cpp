#include "rigami/interval.hpp"

#include <algorithm>

namespace rigami {

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  if (prec_ != o.prec_) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
  }
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.raw().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.raw().get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator+(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& o) const {
  mpfr_prec_t p = std::max(prec_, o.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  // min over the four endpoint products, rounded down
  mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // max over the four, rounded up
  mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::operator/(const Interval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
    fail(ErrorKind::Precision, "interval division by an interval containing zero");
  mpfr_prec_t p = std::max(prec_, o.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
  mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(hi_) < 0) fail(ErrorKind::Internal, "sqrt of negative interval");
  Interval r(prec_);
  if (mpfr_sgn(lo_) < 0) {
    mpfr_set_zero(r.lo_, 1);  // clamp tiny negative lower bounds from rounding
  } else {
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::atan() const {
  Interval r(prec_);
  mpfr_atan(r.lo_, lo_, MPFR_RNDD);
  mpfr_atan(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::abs() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_t t;
  mpfr_init2(t, prec_);
  mpfr_set(t, hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

std::optional<int> Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return 0;
  return std::nullopt;
}

std::optional<bool> Interval::less_than(const Interval& o) const {
  if (mpfr_cmp(hi_, o.lo_) < 0) return true;
  if (mpfr_cmp(lo_, o.hi_) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> Interval::less_than(const Rational& q) const {
  if (mpfr_cmp_q(hi_, q.raw().get_mpq_t()) < 0) return true;
  if (mpfr_cmp_q(lo_, q.raw().get_mpq_t()) >= 0) return false;
  return std::nullopt;
}

std::optional<bool> Interval::greater_than(const Rational& q) const {
  if (mpfr_cmp_q(lo_, q.raw().get_mpq_t()) > 0) return true;
  if (mpfr_cmp_q(hi_, q.raw().get_mpq_t()) <= 0) return false;
  return std::nullopt;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.raw().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.raw().get_mpq_t()) >= 0;
}

Rational Interval::lo_rational() const {
  if (!mpfr_number_p(lo_)) fail(ErrorKind::Internal, "non-finite interval endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), lo_);
  return Rational(q);
}

Rational Interval::hi_rational() const {
  if (!mpfr_number_p(hi_)) fail(ErrorKind::Internal, "non-finite interval endpoint");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), hi_);
  return Rational(q);
}

Rational Interval::width_rational() const { return hi_rational() - lo_rational(); }

double Interval::mid_double() const {
  return (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)) / 2.0;
}

std::string Interval::str(int digits) const {
  char buf[256];
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  mpfr_snprintf(buf, sizeof buf, fmt.c_str(), lo_);
  std::string s = "[";
  s += buf;
  mpfr_snprintf(buf, sizeof buf, fmt.c_str(), hi_);
  s += ", ";
  s += buf;
  s += "]";
  return s;
}

}  // namespace rigami

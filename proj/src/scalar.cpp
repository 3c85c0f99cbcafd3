#include "rigami/scalar.hpp"

#include <algorithm>

namespace rigami {

namespace {
thread_local mpfr_prec_t g_default_prec = 128;
}

mpfr_prec_t Scalar::default_precision() { return g_default_prec; }
void Scalar::set_default_precision(mpfr_prec_t p) { g_default_prec = p; }

const Rational& Scalar::rat() const {
  if (!is_exact()) fail(ErrorKind::Internal, "Scalar::rat() on interval value");
  return std::get<Rational>(v_);
}

Interval Scalar::to_interval(mpfr_prec_t prec) const {
  if (is_exact()) return Interval::from_rational(std::get<Rational>(v_), prec);
  return std::get<Interval>(v_);
}

mpfr_prec_t Scalar::precision_bits() const {
  if (is_exact()) return g_default_prec;
  return std::get<Interval>(v_).precision();
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(-std::get<Rational>(v_));
  return Scalar(-std::get<Interval>(v_));
}

#define RIGAMI_SCALAR_BINOP(op)                                                     \
  if (is_exact() && o.is_exact()) return Scalar(std::get<Rational>(v_) op std::get<Rational>(o.v_)); \
  mpfr_prec_t p = std::max(precision_bits(), o.precision_bits());                   \
  return Scalar(to_interval(p) op o.to_interval(p));

Scalar Scalar::operator+(const Scalar& o) const { RIGAMI_SCALAR_BINOP(+) }
Scalar Scalar::operator-(const Scalar& o) const { RIGAMI_SCALAR_BINOP(-) }
Scalar Scalar::operator*(const Scalar& o) const { RIGAMI_SCALAR_BINOP(*) }

Scalar Scalar::operator/(const Scalar& o) const {
  if (is_exact() && o.is_exact()) {
    if (std::get<Rational>(o.v_).sign() == 0) fail(ErrorKind::Internal, "Scalar division by exact zero");
    return Scalar(std::get<Rational>(v_) / std::get<Rational>(o.v_));
  }
  mpfr_prec_t p = std::max(precision_bits(), o.precision_bits());
  return Scalar(to_interval(p) / o.to_interval(p));
}

Scalar Scalar::sqrt() const {
  if (is_exact()) {
    const Rational& q = std::get<Rational>(v_);
    if (q.sign() < 0) fail(ErrorKind::Internal, "sqrt of negative scalar");
    if (q.is_perfect_square()) return Scalar(q.exact_sqrt());
    return Scalar(Interval::from_rational(q, g_default_prec).sqrt());
  }
  return Scalar(std::get<Interval>(v_).sqrt());
}

Scalar Scalar::atan() const {
  if (is_exact() && std::get<Rational>(v_).sign() == 0) return Scalar(Rational(0));
  return Scalar(to_interval(precision_bits()).atan());
}

Scalar Scalar::abs() const {
  if (is_exact()) return Scalar(std::get<Rational>(v_).abs());
  return Scalar(std::get<Interval>(v_).abs());
}

Scalar Scalar::pi() { return Scalar(Interval::pi(g_default_prec)); }

std::optional<int> Scalar::sign() const {
  if (is_exact()) return std::get<Rational>(v_).sign();
  return std::get<Interval>(v_).sign();
}

std::optional<bool> Scalar::lt(const Scalar& o) const {
  if (is_exact() && o.is_exact()) return std::get<Rational>(v_) < std::get<Rational>(o.v_);
  if (o.is_exact()) return std::get<Interval>(v_).less_than(std::get<Rational>(o.v_));
  if (is_exact()) return o.to_interval(o.precision_bits()).greater_than(std::get<Rational>(v_));
  return std::get<Interval>(v_).less_than(std::get<Interval>(o.v_));
}

std::optional<bool> Scalar::le(const Scalar& o) const {
  // a <= b  <=>  !(b < a)
  auto r = o.lt(*this);
  if (!r) return std::nullopt;
  return !*r;
}

std::optional<bool> Scalar::in_closed(const Rational& lo, const Rational& hi) const {
  if (is_exact()) {
    const Rational& q = std::get<Rational>(v_);
    return q >= lo && q <= hi;
  }
  const Interval& iv = std::get<Interval>(v_);
  auto below = iv.less_than(lo);      // entirely below?
  auto above = iv.greater_than(hi);   // entirely above?
  if (below && *below) return false;
  if (above && *above) return false;
  // inside for sure?
  auto ge_lo = iv.greater_than(lo);
  auto le_hi = iv.less_than(hi);
  bool lo_ok = (ge_lo && *ge_lo) || iv.lo_rational() >= lo;
  bool hi_ok = (le_hi && *le_hi) || iv.hi_rational() <= hi;
  if (lo_ok && hi_ok) return true;
  return std::nullopt;
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(v_).str();
  return std::get<Interval>(v_).str();
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<Rational>(v_).to_double();
  return std::get<Interval>(v_).mid_double();
}

}  // namespace rigami

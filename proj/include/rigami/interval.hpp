#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "rigami/rational.hpp"

namespace rigami {

// Closed interval [lo, hi] with mpfr endpoints, all operations outward rounded,
// so the true value of the represented expression is always contained.
// Recomputing the same expression at a higher precision yields a sub-interval;
// adaptive refinement loops rely on that.
class Interval {
public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval from_long(long v, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return prec_; }

  Interval operator-() const;
  Interval operator+(const Interval& o) const;
  Interval operator-(const Interval& o) const;
  Interval operator*(const Interval& o) const;
  Interval operator/(const Interval& o) const;  // fails if o contains 0
  Interval sqrt() const;                        // fails if entirely negative
  Interval atan() const;
  Interval abs() const;

  // Definitive only when the interval does not straddle the boundary.
  std::optional<int> sign() const;
  std::optional<bool> less_than(const Interval& o) const;         // this < o
  std::optional<bool> less_than(const Rational& q) const;         // this < q
  std::optional<bool> greater_than(const Rational& q) const;      // this > q
  bool contains(const Rational& q) const;                         // q in [lo, hi]

  // Exact endpoint conversions.
  Rational lo_rational() const;
  Rational hi_rational() const;
  Rational width_rational() const;  // hi - lo, rounded up a ulp

  double mid_double() const;
  std::string str(int digits = 20) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

private:
  mpfr_t lo_, hi_;
  mpfr_prec_t prec_;
};

}  // namespace rigami

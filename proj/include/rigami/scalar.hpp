#pragma once

#include <optional>
#include <string>
#include <variant>

#include "rigami/interval.hpp"
#include "rigami/rational.hpp"

namespace rigami {

// Tagged numeric scalar: exact rational, or an outward-rounded interval.
// Arithmetic between exact values stays exact; anything touching an interval
// is interval arithmetic at the wider operand precision. Irrational results
// (sqrt of a non-square, atan, pi) become intervals at the thread's default
// precision unless they come out exact.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT
  Scalar(Rational q) : v_(std::move(q)) {}  // NOLINT
  Scalar(Interval i) : v_(std::move(i)) {}  // NOLINT

  static mpfr_prec_t default_precision();
  static void set_default_precision(mpfr_prec_t p);

  // RAII override of the thread's default precision (refinement loops).
  class PrecisionGuard {
  public:
    explicit PrecisionGuard(mpfr_prec_t p) : saved_(default_precision()) { set_default_precision(p); }
    ~PrecisionGuard() { set_default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    mpfr_prec_t saved_;
  };

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rat() const;
  Interval to_interval(mpfr_prec_t prec) const;
  mpfr_prec_t precision_bits() const;  // default precision for exact values

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;

  Scalar sqrt() const;   // exact when the rational is a perfect square
  Scalar atan() const;   // interval (exact only for 0)
  Scalar abs() const;
  Scalar inv() const { return Scalar(Rational(1)) / *this; }
  static Scalar pi();

  // Tri-state predicates: nullopt means "undecidable at this precision".
  std::optional<int> sign() const;
  std::optional<bool> lt(const Scalar& o) const;
  std::optional<bool> le(const Scalar& o) const;
  std::optional<bool> in_closed(const Rational& lo, const Rational& hi) const;

  // Exact equality; requires both sides exact.
  bool exact_eq(const Scalar& o) const { return rat() == o.rat(); }

  std::string str() const;
  double to_double() const;

private:
  std::variant<Rational, Interval> v_;
};

}  // namespace rigami

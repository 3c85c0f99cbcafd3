#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rigami/error.hpp"

namespace rigami {

using BigInt = mpz_class;

// Exact rational scalar. Always canonical: den > 0, gcd(|num|, den) = 1.
// mpq_class keeps results of arithmetic canonical as long as the operands are,
// so only the constructors have to canonicalize.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(const BigInt& n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { canonicalize_checked(); }
  Rational(const BigInt& n, const BigInt& d) : v_(n, d) { canonicalize_checked(); }
  explicit Rational(mpq_class q) : v_(std::move(q)) { canonicalize_checked(); }

  // Accepts "num", "-num", or "num/den" in base 10.
  static Rational from_string(const std::string& s);

  // "num" when den == 1, otherwise "num/den".
  std::string str() const;

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), already_canonical{}); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), already_canonical{}); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), already_canonical{}); }
  Rational operator/(const Rational& o) const {
    if (sgn(o.v_) == 0) fail(ErrorKind::Internal, "rational division by zero");
    return Rational(mpq_class(v_ / o.v_), already_canonical{});
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (sgn(o.v_) == 0) fail(ErrorKind::Internal, "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_)), already_canonical{}); }
  Rational inv() const {
    if (sign() == 0) fail(ErrorKind::Internal, "rational inverse of zero");
    return Rational(mpq_class(1 / v_), already_canonical{});
  }

  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }
  BigInt ceil() const {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  // Nearest multiple of 1/G; exact ties round toward +infinity.
  Rational round_to_grid(const BigInt& G) const {
    Rational scaled = *this * Rational(G) + Rational(1, 2);
    return Rational(scaled.floor()) / Rational(G);
  }

  // A canonical rational is a square in Q iff numerator and denominator are
  // both perfect integer squares.
  bool is_perfect_square() const {
    if (sign() < 0) return false;
    return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
  }
  Rational exact_sqrt() const {
    if (!is_perfect_square()) fail(ErrorKind::Internal, "exact_sqrt on non-square rational");
    BigInt n, d;
    mpz_sqrt(n.get_mpz_t(), v_.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(n, d);
  }

  // Smallest integer k with k*k >= q. Requires q >= 0.
  static BigInt ceil_sqrt(const Rational& q) {
    if (q.sign() < 0) fail(ErrorKind::Internal, "ceil_sqrt of negative");
    // k = ceil(sqrt(num/den)): start from isqrt(floor(q)) and fix up.
    BigInt fl = q.floor();
    BigInt k;
    mpz_sqrt(k.get_mpz_t(), fl.get_mpz_t());
    auto square = [](const BigInt& x) { return BigInt(x * x); };
    while (Rational(square(k)) < q) ++k;
    while (k > 0 && Rational(square(BigInt(k - 1))) >= q) --k;
    return k;
  }

  double to_double() const { return v_.get_d(); }

private:
  struct already_canonical {};
  Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
  void canonicalize_checked() {
    if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
      fail(ErrorKind::Parse, "rational with zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) fail(ErrorKind::Parse, "bad rational literal: '" + s + "'");
    return Rational(BigInt(s));
  }
  std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) fail(ErrorKind::Parse, "bad rational literal: '" + s + "'");
  BigInt n(ns), d(ds);
  if (sgn(d) == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  return Rational(n, d);
}

inline std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace rigami

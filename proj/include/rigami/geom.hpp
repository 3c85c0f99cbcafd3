#pragma once

#include <utility>

#include "rigami/scalar.hpp"

namespace rigami {

struct Vec2R {
  Rational x, y;

  Vec2R() = default;
  Vec2R(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

  Vec2R operator+(const Vec2R& o) const { return {x + o.x, y + o.y}; }
  Vec2R operator-(const Vec2R& o) const { return {x - o.x, y - o.y}; }
  Vec2R operator-() const { return {-x, -y}; }
  Vec2R operator*(const Rational& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2R& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Vec2R& o) const { return !(*this == o); }

  // (x,y)^perp = (-y,x), a 90 degree left rotation
  Vec2R perp() const { return {-y, x}; }
  bool is_zero() const { return x.sign() == 0 && y.sign() == 0; }
};

inline Rational dot(const Vec2R& a, const Vec2R& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2R& a, const Vec2R& b) { return a.x * b.y - a.y * b.x; }
inline Rational norm2(const Vec2R& a) { return dot(a, a); }

// Lexicographic order, used for canonical keys only (not geometry).
inline bool lex_less(const Vec2R& a, const Vec2R& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Reflection of p through the line spanned by q (q != 0), exact:
// p' = p - 2 ((p . q_perp) / (q . q)) q_perp
inline Vec2R reflect(const Vec2R& p, const Vec2R& q) {
  if (q.is_zero()) fail(ErrorKind::Internal, "reflect through zero vector");
  Vec2R qp = q.perp();
  Rational k = (dot(p, qp) * Rational(2)) / dot(q, q);
  return p - qp * k;
}

// CCW rotation with rational entries, parameterized by t = tan(angle/2).
struct RotationR {
  Rational c, s;  // cos, sin
  static RotationR from_tan_half(const Rational& t) {
    Rational t2 = t * t;
    Rational d = Rational(1) + t2;
    return {(Rational(1) - t2) / d, (t * Rational(2)) / d};
  }
  Vec2R apply(const Vec2R& v) const { return {c * v.x - s * v.y, s * v.x + c * v.y}; }
};

inline bool same_direction(const Vec2R& u, const Vec2R& v) {
  return cross(u, v).sign() == 0 && dot(u, v).sign() > 0;
}
inline bool opposite_direction(const Vec2R& u, const Vec2R& v) {
  return cross(u, v).sign() == 0 && dot(u, v).sign() < 0;
}

// Half-plane index for exact angular sorting, angle 0 = +x axis, ccw.
inline int angular_quadrant(const Vec2R& u) {
  if (u.is_zero()) fail(ErrorKind::Internal, "direction of zero vector");
  int sx = u.x.sign(), sy = u.y.sign();
  if (sy == 0) return sx > 0 ? 0 : 2;
  if (sy > 0) return sx > 0 ? 0 : 1;
  return sx < 0 ? 2 : 3;
}

// Total order on directions by angle in [0, 2pi); exact.
// Returns <0, 0, >0 like a comparator. 0 means same direction.
inline int angle_compare(const Vec2R& u, const Vec2R& v) {
  int qu = angular_quadrant(u), qv = angular_quadrant(v);
  if (qu != qv) return qu < qv ? -1 : 1;
  int cs = cross(u, v).sign();
  if (cs > 0) return -1;  // v lies ccw of u within the same quadrant
  if (cs < 0) return 1;
  return 0;
}

// Length as a Scalar: exact when x^2 + y^2 is a perfect square.
inline Scalar vec_norm(const Vec2R& a) { return Scalar(norm2(a)).sqrt(); }

// (cos, sin) of the ccw angle from u to v, as Scalars.
inline std::pair<Scalar, Scalar> cos_sin_between(const Vec2R& u, const Vec2R& v) {
  Scalar L = Scalar(norm2(u) * norm2(v)).sqrt();
  return {Scalar(dot(u, v)) / L, Scalar(cross(u, v)) / L};
}

// CCW angle from u to v in (0, 2pi) as a Scalar (radians). Exactly-equal
// directions are rejected; exactly-opposite directions give the pi interval.
inline Scalar angle_between_ccw(const Vec2R& u, const Vec2R& v) {
  Rational cr = cross(u, v);
  Rational dt = dot(u, v);
  if (cr.sign() == 0) {
    if (dt.sign() > 0) fail(ErrorKind::Validate, "zero sector between coincident directions");
    return Scalar::pi();
  }
  auto [c, s] = cos_sin_between(u, v);
  if (cr.sign() > 0) {
    // angle in (0, pi): theta = 2 atan(sin / (1 + cos))
    Scalar t = s / (Scalar(1) + c);
    return t.atan() * Scalar(2);
  }
  // angle in (pi, 2pi): 2pi - angle(v->u)
  Scalar t = (-s) / (Scalar(1) + c);
  return Scalar::pi() * Scalar(2) - t.atan() * Scalar(2);
}

}  // namespace rigami

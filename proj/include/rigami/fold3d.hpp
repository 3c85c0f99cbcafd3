#pragma once

#include <array>
#include <map>

#include "rigami/certificate.hpp"
#include "rigami/pattern.hpp"

namespace rigami {

// Small dense interval linear algebra, just enough for loop-closure residuals.
struct Mat3I {
  std::array<Interval, 9> m;  // row major
  static Mat3I identity(mpfr_prec_t prec);
  Mat3I mul(const Mat3I& o) const;
  // upper bound of max |entry - o.entry|
  Rational max_abs_diff(const Mat3I& o) const;
};

struct Vec3I {
  std::array<Interval, 3> v;
  static Vec3I zero(mpfr_prec_t prec);
};

// Rigid placement x -> R x + t.
struct Placement {
  Mat3I R;
  Vec3I t;
  static Placement identity(mpfr_prec_t prec);
  Placement compose(const Placement& o) const;  // this ∘ o
  Rational max_abs_diff(const Placement& o) const;
};

// Rotation about the z axis by the angle whose cosine/sine are given.
Mat3I rot_z(const Interval& c, const Interval& s, mpfr_prec_t prec);
// Rotation about the x axis by the angle with tangent half-angle t.
Mat3I rot_x_tan_half(const Scalar& t, mpfr_prec_t prec);
// Rotation about the directed line a->b (in the z=0 plane) by the angle with
// tangent half-angle t, as a placement.
Placement rotation_about_line(const Vec2R& a, const Vec2R& b, const Scalar& t, mpfr_prec_t prec);

// Residual of the single-vertex loop-closure product for a flat star:
// || prod_i R_x(rho_i) R_z(sector_i) - I ||_inf, where rho_i is given by its
// tangent half-angle and sector_i by its cosine/sine pair.
Rational vertex_loop_residual(const std::vector<std::pair<Scalar, Scalar>>& sector_cos_sin,
                              const std::vector<Scalar>& tan_half_rho, mpfr_prec_t prec);

// Full 3D state of the pattern folded to parameter t along a certificate.
struct FoldState3D {
  Scalar parameter;
  std::map<int, Scalar> fold_angles;      // crease id -> rho (radians)
  std::map<int, Placement> face_placements;
  Rational max_residual;                  // upper bound over all closure checks
};

FoldState3D fold_state_3d(const CreasePattern& p, const ModeCertificate& cert, const Scalar& t,
                          mpfr_prec_t prec);

}  // namespace rigami

#include "rigami/kinematics.hpp"

namespace rigami {

namespace {

// tan(theta/2) for the ccw sector from u to v, theta in (0, pi).
Scalar tan_half_sector(const Vec2R& u, const Vec2R& v) {
  Rational cr = cross(u, v);
  if (cr.sign() == 0) fail(ErrorKind::Validate, "degenerate sector (0 or pi)");
  Scalar L = Scalar(norm2(u) * norm2(v)).sqrt();
  return (L - Scalar(dot(u, v))) / Scalar(cr);
}

}  // namespace

VertexKinematics compute_kinematics(const std::array<Vec2R, 4>& dirs_ccw) {
  VertexKinematics k;
  k.dirs = dirs_ccw;
  k.alpha = angle_between_ccw(dirs_ccw[0], dirs_ccw[1]);
  k.beta = angle_between_ccw(dirs_ccw[1], dirs_ccw[2]);
  k.tan_half_alpha = tan_half_sector(dirs_ccw[0], dirs_ccw[1]);
  k.tan_half_beta = tan_half_sector(dirs_ccw[1], dirs_ccw[2]);
  Scalar prod = k.tan_half_alpha * k.tan_half_beta;
  k.p_a = (Scalar(1) - prod) / (Scalar(1) + prod);
  k.p_b = (k.tan_half_beta - k.tan_half_alpha) / (k.tan_half_beta + k.tan_half_alpha);
  return k;
}

VertexKinematics compute_kinematics(const VertexStar& star) {
  if (star.creases.size() != 4)
    fail(ErrorKind::Validate, "compute_kinematics needs a degree-4 star");
  return compute_kinematics({star.directions[0], star.directions[1], star.directions[2], star.directions[3]});
}

std::array<Scalar, 4> mode_shape(const VertexKinematics& kin, VertexMode mode) {
  if (mode == VertexMode::A) return {Scalar(1), -kin.p_a, Scalar(1), kin.p_a};
  return {-kin.p_b, Scalar(1), kin.p_b, Scalar(1)};
}

std::array<Scalar, 4> single_vertex_state(const VertexKinematics& kin, VertexMode mode, const Scalar& t) {
  auto s = mode_shape(kin, mode);
  for (auto& x : s) x = x * t;
  return s;
}

SpeedRatio speed_coefficient(const VertexKinematics& kin, VertexMode mode, int from_idx, int to_idx) {
  if (from_idx < 0 || from_idx > 3 || to_idx < 0 || to_idx > 3 ||
      (to_idx != (from_idx + 1) % 4 && from_idx != (to_idx + 1) % 4))
    fail(ErrorKind::Validate, "speed_coefficient needs cyclically adjacent crease indices");
  auto shape = mode_shape(kin, mode);
  const Scalar& num = shape[to_idx];
  const Scalar& den = shape[from_idx];
  auto den_sign = den.sign();
  if (!den_sign) fail(ErrorKind::Precision, "speed coefficient undecidable: p straddles zero");
  SpeedRatio r;
  if (*den_sign == 0) {
    r.suppressed = true;
    return r;
  }
  r.value = num / den;
  return r;
}

bool mode_degenerate(const VertexKinematics& kin, VertexMode mode) {
  const Scalar& p = (mode == VertexMode::A) ? kin.p_a : kin.p_b;
  auto s = p.sign();
  if (!s) fail(ErrorKind::Precision, "mode degeneracy undecidable: p straddles zero");
  return *s == 0;
}

bool opposite_angle_relations(const std::array<Scalar, 4>& rho) {
  auto near_zero = [&](const Scalar& s) {
    if (s.is_exact()) return s.rat().sign() == 0;
    // inexact: zero must be inside the interval
    return s.to_interval(s.precision_bits()).contains(Rational(0));
  };
  bool mode_a = near_zero(rho[0] - rho[2]) && near_zero(rho[1] + rho[3]);
  bool mode_b = near_zero(rho[1] - rho[3]) && near_zero(rho[0] + rho[2]);
  return mode_a || mode_b;
}

}  // namespace rigami

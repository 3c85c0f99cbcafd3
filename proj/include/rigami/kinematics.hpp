#pragma once

#include <array>

#include "rigami/pattern.hpp"

namespace rigami {

enum class VertexMode { A, B };

inline const char* mode_name(VertexMode m) { return m == VertexMode::A ? "A" : "B"; }

// Constants of a flat-foldable degree-4 vertex with sectors
// (alpha, beta, pi－alpha, pi－beta) read from the canonical crease order.
// Tangent half-angles come straight from the coordinates:
//   tan(theta/2) = (|u||v| - u.v) / (u x v)
// which is exact whenever |u||v| is rational.
struct VertexKinematics {
  Scalar alpha, beta;             // radians; intervals except degenerate cases
  Scalar tan_half_alpha, tan_half_beta;
  Scalar p_a, p_b;
  std::array<Vec2R, 4> dirs;      // crease directions, ccw, canonical start
};

// From the 4 ccw directions of a flat-foldable star (Kawasaki must hold).
VertexKinematics compute_kinematics(const std::array<Vec2R, 4>& dirs_ccw);
VertexKinematics compute_kinematics(const VertexStar& star);

// Signed speed ratio t_to / t_from between two adjacent creases; follows the
// mode tables. Suppressed marks an infinite ratio (the source crease has
// speed zero in this mode, so the target cannot co-fold at finite speed).
struct SpeedRatio {
  bool suppressed = false;
  Scalar value;  // meaningful iff !suppressed
};
SpeedRatio speed_coefficient(const VertexKinematics& kin, VertexMode mode, int from_idx, int to_idx);

// Mode shape per Theorem-1: A -> (1, -p_a, 1, p_a), B -> (-p_b, 1, p_b, 1).
std::array<Scalar, 4> mode_shape(const VertexKinematics& kin, VertexMode mode);

// (t0, t1, t2, t3) of the one-parameter branch at parameter t.
std::array<Scalar, 4> single_vertex_state(const VertexKinematics& kin, VertexMode mode, const Scalar& t);

// True iff (r0 = r2 and r1 = -r3) or (r1 = r3 and r0 = -r2), within interval
// width for inexact scalars.
bool opposite_angle_relations(const std::array<Scalar, 4>& rho);

// Whether a mode is degenerate at this vertex (its p constant is zero, so two
// of the four creases do not move). Requires a definite sign; throws
// ErrorKind::Precision when the interval straddles zero.
bool mode_degenerate(const VertexKinematics& kin, VertexMode mode);

}  // namespace rigami

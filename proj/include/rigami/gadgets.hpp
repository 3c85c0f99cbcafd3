#pragma once

#include <array>
#include <vector>

#include "rigami/arrangement.hpp"
#include "rigami/pattern.hpp"

namespace rigami {

// ---------------------------------------------------------------------------
// Exact-rational twist-fold geometry.
//
// A twist is a central square of side `side` whose edges run along the unit
// direction u = (sin a, cos a) (a is the twist angle, the smallest sector at
// every corner), with two axis-parallel pleat creases leaving each corner.
// Both families used by the reductions have rational u:
//   arctan(3/4)    : u = (3/5, 4/5),    side 5/2   (pleat gap 3/2, shift 2)
//   2*arctan(7/9)  : u = (63/65,16/65), side 65/42 (pleat gap 3/2, shift 8/21)
// Equal pleat gaps let the two families share wire profiles.
// ---------------------------------------------------------------------------

struct TwistFamily {
  Rational side;
  Vec2R u;  // central square edge direction, |u| = 1 exactly
  static TwistFamily f345();
  static TwistFamily f79();
};

// One twist placed at `center`, optionally mirrored about vertical/horizontal
// axes through the center. Pleat creases are clipped to `clip` spans given
// per side; a negative span means "emit up to the cell rectangle". Segments
// are appended with the given kind and tag.
struct TwistSpec {
  TwistFamily family;
  Vec2R center;
  bool mirror_x = false;
  bool mirror_y = false;
};

// Corner and pleat geometry of a twist, already transformed.
struct TwistGeometry {
  std::array<Vec2R, 4> corners;  // ccw
  // pleat attach points by side: W, E, S, N; two creases per side
  std::array<std::array<Vec2R, 2>, 4> attach;  // [side][crease]
  std::array<Vec2R, 4> pleat_dir;              // outward unit direction per side
};
enum TwistSide { TW_W = 0, TW_E = 1, TW_S = 2, TW_N = 3 };

TwistGeometry twist_geometry(const TwistSpec& spec);

// Emits the 4 central-square segments; pleats are the caller's business
// (their extent depends on the surrounding structure).
void emit_twist_square(const TwistSpec& spec, EdgeKind kind, int tag, std::vector<ArrSegment>& out);

// ---------------------------------------------------------------------------
// Reference patterns.
// ---------------------------------------------------------------------------

// Single 3-4-5 square twist in an 8x8 sheet: 4 interior degree-4 vertices,
// twist angle arctan(3/4), all creases unassigned.
CreasePattern square_twist_pattern();

// Two perpendicular lines through one interior vertex on a 2x2 sheet.
CreasePattern perpendicular_cross_pattern();

// A single interior vertex with the given ccw crease directions; the boundary
// is the polygon through the crease endpoints center + dirs[i].
CreasePattern single_vertex_pattern(const std::vector<Vec2R>& dirs, const Vec2R& center = Vec2R{Rational(0), Rational(0)});

}  // namespace rigami

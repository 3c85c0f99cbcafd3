#pragma once

#include <vector>

#include "rigami/arrangement.hpp"
#include "rigami/pattern.hpp"

namespace rigami::testing {

inline ArrSegment seg(long ax, long ay, long bx, long by, EdgeKind k = EdgeKind::Unassigned) {
  return {{Rational(ax), Rational(ay)}, {Rational(bx), Rational(by)}, k, -1};
}

inline ArrSegment segq(Rational ax, Rational ay, Rational bx, Rational by,
                       EdgeKind k = EdgeKind::Unassigned) {
  return {{ax, ay}, {bx, by}, k, -1};
}

// axis-aligned rectangle border
inline void add_rect_border(std::vector<ArrSegment>& out, long x0, long y0, long x1, long y1) {
  out.push_back(seg(x0, y0, x1, y0, EdgeKind::Border));
  out.push_back(seg(x1, y0, x1, y1, EdgeKind::Border));
  out.push_back(seg(x1, y1, x0, y1, EdgeKind::Border));
  out.push_back(seg(x0, y1, x0, y0, EdgeKind::Border));
}

// unit square with one diagonal crease
inline CreasePattern square_with_diagonal() {
  std::vector<ArrSegment> s;
  add_rect_border(s, 0, 0, 1, 1);
  s.push_back(seg(0, 0, 1, 1));
  return pattern_from_segments(s, false);
}

// square with both diagonals (they cross in the middle)
inline CreasePattern square_with_both_diagonals() {
  std::vector<ArrSegment> s;
  add_rect_border(s, 0, 0, 2, 2);
  s.push_back(seg(0, 0, 2, 2));
  s.push_back(seg(0, 2, 2, 0));
  return pattern_from_segments(s, false);
}

// 2x2 grid of unit squares
inline CreasePattern grid_2x2() {
  std::vector<ArrSegment> s;
  add_rect_border(s, 0, 0, 2, 2);
  s.push_back(seg(1, 0, 1, 2));
  s.push_back(seg(0, 1, 2, 1));
  return pattern_from_segments(s, false);
}

// Two perpendicular lines through one interior vertex: the one-vertex pattern
// that folds with optional creases but not with all creases.
inline CreasePattern perpendicular_cross() {
  std::vector<ArrSegment> s;
  add_rect_border(s, 0, 0, 2, 2);
  s.push_back(seg(0, 1, 2, 1));
  s.push_back(seg(1, 0, 1, 2));
  return pattern_from_segments(s, false);
}

// first interior vertex of a pattern (tests on single-vertex patterns)
inline int p_interior_vertex(const CreasePattern& p) {
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.is_interior_vertex(v)) return v;
  fail(ErrorKind::Internal, "no interior vertex");
}

}  // namespace rigami::testing

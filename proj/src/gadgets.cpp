#include "rigami/gadgets.hpp"

namespace rigami {

TwistFamily TwistFamily::f345() { return {Rational(5, 2), {Rational(3, 5), Rational(4, 5)}}; }
TwistFamily TwistFamily::f79() { return {Rational(65, 42), {Rational(63, 65), Rational(16, 65)}}; }

TwistGeometry twist_geometry(const TwistSpec& spec) {
  const Vec2R u = spec.family.u;
  const Vec2R up = u.perp();
  const Rational& s = spec.family.side;
  Rational half = Rational(1, 2);
  // base (unmirrored) corners around the center
  Vec2R q0 = spec.center - (u + up) * (s * half);
  Vec2R q1 = q0 + u * s;
  Vec2R q2 = q1 + up * s;
  Vec2R q3 = q0 + up * s;
  // base pleats: q0: LEFT+DOWN, q1: DOWN+RIGHT, q2: RIGHT+UP, q3: UP+LEFT
  TwistGeometry g;
  g.corners = {q0, q1, q2, q3};
  g.attach[TW_W] = {q0, q3};
  g.attach[TW_E] = {q1, q2};
  g.attach[TW_S] = {q0, q1};
  g.attach[TW_N] = {q3, q2};
  g.pleat_dir[TW_W] = {Rational(-1), Rational(0)};
  g.pleat_dir[TW_E] = {Rational(1), Rational(0)};
  g.pleat_dir[TW_S] = {Rational(0), Rational(-1)};
  g.pleat_dir[TW_N] = {Rational(0), Rational(1)};

  auto apply_mirror = [&](Vec2R p) {
    if (spec.mirror_x) p.x = spec.center.x * Rational(2) - p.x;
    if (spec.mirror_y) p.y = spec.center.y * Rational(2) - p.y;
    return p;
  };
  if (spec.mirror_x || spec.mirror_y) {
    for (auto& c : g.corners) c = apply_mirror(c);
    for (auto& side : g.attach)
      for (auto& a : side) a = apply_mirror(a);
    if (spec.mirror_x) {
      std::swap(g.attach[TW_W], g.attach[TW_E]);
    }
    if (spec.mirror_y) {
      std::swap(g.attach[TW_S], g.attach[TW_N]);
    }
  }
  return g;
}

void emit_twist_square(const TwistSpec& spec, EdgeKind kind, int tag, std::vector<ArrSegment>& out) {
  TwistGeometry g = twist_geometry(spec);
  for (int i = 0; i < 4; ++i)
    out.push_back({g.corners[i], g.corners[(i + 1) % 4], kind, tag});
}

CreasePattern square_twist_pattern() {
  std::vector<ArrSegment> segs;
  TwistSpec spec{TwistFamily::f345(), {Rational(4), Rational(4)}, false, false};
  emit_twist_square(spec, EdgeKind::Unassigned, -1, segs);
  TwistGeometry g = twist_geometry(spec);
  const Rational zero(0), eight(8);
  // pleats to the sheet border
  for (int side = 0; side < 4; ++side) {
    for (const Vec2R& a : g.attach[side]) {
      Vec2R b = a;
      switch (side) {
        case TW_W: b.x = zero; break;
        case TW_E: b.x = eight; break;
        case TW_S: b.y = zero; break;
        case TW_N: b.y = eight; break;
      }
      segs.push_back({a, b, EdgeKind::Unassigned, -1});
    }
  }
  segs.push_back({{zero, zero}, {eight, zero}, EdgeKind::Border, -1});
  segs.push_back({{eight, zero}, {eight, eight}, EdgeKind::Border, -1});
  segs.push_back({{eight, eight}, {zero, eight}, EdgeKind::Border, -1});
  segs.push_back({{zero, eight}, {zero, zero}, EdgeKind::Border, -1});
  return pattern_from_segments(segs, false);
}

CreasePattern perpendicular_cross_pattern() {
  std::vector<ArrSegment> segs;
  const Rational zero(0), one(1), two(2);
  segs.push_back({{zero, one}, {two, one}, EdgeKind::Unassigned, -1});
  segs.push_back({{one, zero}, {one, two}, EdgeKind::Unassigned, -1});
  segs.push_back({{zero, zero}, {two, zero}, EdgeKind::Border, -1});
  segs.push_back({{two, zero}, {two, two}, EdgeKind::Border, -1});
  segs.push_back({{two, two}, {zero, two}, EdgeKind::Border, -1});
  segs.push_back({{zero, two}, {zero, zero}, EdgeKind::Border, -1});
  return pattern_from_segments(segs, false);
}

CreasePattern single_vertex_pattern(const std::vector<Vec2R>& dirs, const Vec2R& center) {
  if (dirs.size() < 3) fail(ErrorKind::Validate, "single_vertex_pattern needs >= 3 creases");
  std::vector<ArrSegment> segs;
  std::vector<Vec2R> ring;
  for (const auto& d : dirs) ring.push_back(center + d);
  for (size_t i = 0; i < dirs.size(); ++i) {
    segs.push_back({center, ring[i], EdgeKind::Unassigned, -1});
    segs.push_back({ring[i], ring[(i + 1) % ring.size()], EdgeKind::Border, -1});
  }
  return pattern_from_segments(segs, false);
}

}  // namespace rigami

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rigami/flat_fold.hpp"
#include "rigami/gadgets.hpp"
#include "test_helpers.hpp"

using namespace rigami;
using namespace rigami::testing;

namespace {
Vec2R unit_from_tan_half(const Rational& t) {
  Rational t2 = t * t, d = Rational(1) + t2;
  return {(Rational(1) - t2) / d, (t * Rational(2)) / d};
}
}  // namespace

TEST_CASE("reflection formula (exact)") {
  CHECK(reflect({Rational(1), Rational(0)}, {Rational(1), Rational(0)}) == Vec2R{Rational(1), Rational(0)});
  CHECK(reflect({Rational(0), Rational(1)}, {Rational(1), Rational(0)}) == Vec2R{Rational(0), Rational(-1)});
  CHECK(reflect({Rational(1), Rational(2)}, {Rational(1), Rational(1)}) == Vec2R{Rational(2), Rational(1)});
  CHECK_THROWS_AS(reflect({Rational(1), Rational(0)}, {Rational(0), Rational(0)}), Error);
}

TEST_CASE("kawasaki reflection predicate on right-angle star") {
  std::array<Vec2R, 4> dirs = {Vec2R{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                               {Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
  CHECK(kawasaki_check_degree4(dirs));
}

TEST_CASE("kawasaki accepts supplementary-opposite sectors, exact rational directions") {
  // sectors (a, b, pi-a, pi-b) built by exact tangent half-angle rotations
  RotationR ra = RotationR::from_tan_half(Rational(5, 12));
  RotationR rb = RotationR::from_tan_half(Rational(2, 7));
  Vec2R u0{Rational(1), Rational(0)};
  Vec2R u1 = ra.apply(u0);
  Vec2R u2 = rb.apply(u1);
  Vec2R u3 = -rb.apply(u0);
  CHECK(kawasaki_check_degree4({u0, u1, u2, u3}));
  // scale invariance: directions at arbitrary rational lengths
  CHECK(kawasaki_check_degree4({u0 * Rational(3), u1 * Rational(1, 2), u2 * Rational(7, 5), u3 * Rational(2)}));
  // invariance under a global exactly-rational rotation
  RotationR g = RotationR::from_tan_half(Rational(1, 3));
  CHECK(kawasaki_check_degree4({g.apply(u0), g.apply(u1), g.apply(u2), g.apply(u3)}));
}

TEST_CASE("kawasaki rejects alternating equal sectors (a, b, a, b), a != 90deg") {
  // a = 2*atan(5/6), b = pi - a; cyclic sectors (a, b, a, b) fail Kawasaki
  RotationR ra = RotationR::from_tan_half(Rational(5, 6));
  RotationR rb = RotationR::from_tan_half(Rational(6, 5));
  Vec2R u0{Rational(1), Rational(0)};
  Vec2R u1 = ra.apply(u0);
  Vec2R u2 = rb.apply(u1);
  Vec2R u3 = ra.apply(u2);
  CHECK_FALSE(kawasaki_check_degree4({u0, u1, u2, u3}));
}

TEST_CASE("classify: perpendicular star, collinear pair, degree five") {
  auto cross = perpendicular_cross_pattern();
  int center = -1;
  for (int v = 0; v < cross.vertex_count(); ++v)
    if (cross.is_interior_vertex(v)) center = v;
  REQUIRE(center >= 0);
  auto c = classify_vertex(cross, center);
  CHECK(c.kind == VertexKind::Degree4FlatFoldable);
  // alpha = beta = pi/2 within the interval
  auto half_pi_lo = Rational(15707, 10000), half_pi_hi = Rational(15709, 10000);
  auto ina = c.alpha.in_closed(half_pi_lo, half_pi_hi);
  REQUIRE(ina.has_value());
  CHECK(*ina);

  // two collinear creases through an interior vertex
  {
    std::vector<ArrSegment> s;
    add_rect_border(s, 0, 0, 2, 2);
    s.push_back(seg(0, 1, 1, 1));
    s.push_back(seg(1, 1, 2, 1));
    auto p = pattern_from_segments(s, false);
    int v = -1;
    for (int i = 0; i < p.vertex_count(); ++i)
      if (p.is_interior_vertex(i)) v = i;
    REQUIRE(v >= 0);
    CHECK(classify_vertex(p, v).kind == VertexKind::CollinearPair);
  }

  // degree-5 vertex -> Other
  {
    std::vector<Vec2R> dirs = {{Rational(1), Rational(0)},
                               {Rational(0), Rational(1)},
                               {Rational(-1), Rational(1)},
                               {Rational(-1), Rational(-1)},
                               {Rational(1), Rational(-1)}};
    auto p = single_vertex_pattern(dirs);
    CHECK(classify_vertex(p, p_interior_vertex(p)).kind == VertexKind::Other);
  }

  // boundary vertices classify Boundary
  CHECK(classify_vertex(cross, cross.boundary()[0]).kind == VertexKind::Boundary);
}

TEST_CASE("square twist pattern: 4 interior flat-foldable vertices, central square face") {
  auto p = square_twist_pattern();
  int interior = 0;
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (!p.is_interior_vertex(v)) continue;
    ++interior;
    auto c = classify_vertex(p, v);
    CHECK(c.kind == VertexKind::Degree4FlatFoldable);
  }
  CHECK(interior == 4);
  // exactly one face has all-interior corners: the central square
  int constrained = 0;
  for (const auto& f : p.faces())
    if (f.all_corners_interior) {
      ++constrained;
      CHECK(f.corners.size() == 4);
    }
  CHECK(constrained == 1);
  CHECK(p.faces().size() == 9);
}

TEST_CASE("classify on random supplementary stars built from rational tangents") {
  // deterministic sweep in lieu of a fuzzer
  std::vector<Rational> ts = {Rational(1, 3), Rational(2, 5), Rational(7, 9), Rational(12, 13)};
  for (const auto& ta : ts)
    for (const auto& tb : ts) {
      RotationR ra = RotationR::from_tan_half(ta);
      RotationR rb = RotationR::from_tan_half(tb);
      Vec2R u0 = unit_from_tan_half(Rational(1, 7));  // global tilt
      Vec2R u1 = ra.apply(u0);
      Vec2R u2 = rb.apply(u1);
      Vec2R u3 = -rb.apply(u0);
      auto p = single_vertex_pattern({u0, u1, u2, u3});
      auto c = classify_vertex(p, p_interior_vertex(p));
      CHECK(c.kind == VertexKind::Degree4FlatFoldable);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>

#include "rigami/pattern_io.hpp"
#include "test_helpers.hpp"

using namespace rigami;
using namespace rigami::testing;

TEST_CASE("unit square with one diagonal has two faces") {
  auto p = square_with_diagonal();
  CHECK(p.vertex_count() == 4);
  CHECK(p.edge_count() == 5);
  CHECK(p.faces().size() == 2);
  CHECK(p.crease_ids().size() == 1);
  // Euler: V - E + (F_bounded + 1) = 2
  CHECK(p.vertex_count() - p.edge_count() + static_cast<int>(p.faces().size()) + 1 == 2);
}

TEST_CASE("square with both diagonals splits into four triangles") {
  auto p = square_with_both_diagonals();
  CHECK(p.vertex_count() == 5);
  CHECK(p.faces().size() == 4);
  for (const auto& f : p.faces()) CHECK(f.corners.size() == 3);
}

TEST_CASE("2x2 grid has four square faces") {
  auto p = grid_2x2();
  CHECK(p.faces().size() == 4);
  for (const auto& f : p.faces()) CHECK(f.corners.size() == 4);
}

TEST_CASE("crossing creases sharing no vertex are rejected") {
  std::vector<Vec2R> vs = {{Rational(0), Rational(0)}, {Rational(2), Rational(0)},
                           {Rational(2), Rational(2)}, {Rational(0), Rational(2)},
                           {Rational(0), Rational(1)}, {Rational(2), Rational(1)},
                           {Rational(1), Rational(0)}, {Rational(1), Rational(2)}};
  std::vector<Edge> es = {{0, 6, EdgeKind::Border}, {6, 1, EdgeKind::Border},
                          {1, 5, EdgeKind::Border}, {5, 2, EdgeKind::Border},
                          {2, 7, EdgeKind::Border}, {7, 3, EdgeKind::Border},
                          {3, 4, EdgeKind::Border}, {4, 0, EdgeKind::Border},
                          {4, 5, EdgeKind::Unassigned}, {6, 7, EdgeKind::Unassigned}};
  std::vector<int> boundary = {0, 6, 1, 5, 2, 7, 3, 4};
  CHECK_THROWS_AS(CreasePattern::build(vs, es, boundary), Error);
}

TEST_CASE("vertex star is ccw from the lowest crease id and sectors sum to 2pi") {
  auto p = perpendicular_cross();
  int center = -1;
  for (int v = 0; v < p.vertex_count(); ++v)
    if (p.is_interior_vertex(v)) center = v;
  REQUIRE(center >= 0);
  auto star = p.vertex_star(center);
  REQUIRE(star.creases.size() == 4);
  CHECK(star.creases[0] == *std::min_element(star.creases.begin(), star.creases.end()));
  Scalar sum = Scalar(Rational(0));
  for (const auto& a : star.sector_angles) sum = sum + a;
  Scalar defect = (sum - Scalar::pi() * Scalar(Rational(2))).abs();
  auto small = defect.lt(Scalar(Rational(1, BigInt(1) << 60)));
  REQUIRE(small.has_value());
  CHECK(*small);
  for (size_t i = 0; i < 4; ++i) {
    Rational d = dot(star.directions[i], star.directions[(i + 1) % 4]);
    CHECK(d.sign() == 0);  // all four sectors are right angles
  }
}

TEST_CASE("json round-trip is exact") {
  auto p = square_with_both_diagonals();
  auto j = pattern_to_json(p);
  auto q = pattern_from_json(j);
  CHECK(pattern_to_json(q) == j);
  CHECK(q.vertex_count() == p.vertex_count());
  CHECK(q.faces().size() == p.faces().size());

  std::string path = "/tmp/rigami_test_pattern.json";
  save_pattern(p, path);
  auto r = load_pattern(path);
  CHECK(pattern_to_json(r) == j);
  std::remove(path.c_str());
}

TEST_CASE("svg export contains styled lines") {
  auto p = square_with_diagonal();
  std::string svg = pattern_to_svg(p);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // unassigned crease
  CHECK(svg.find("#000000") != std::string::npos);           // border
}

TEST_CASE("arrangement merges collinear overlaps and splits at crossings") {
  std::vector<ArrSegment> s;
  add_rect_border(s, 0, 0, 4, 4);
  s.push_back(seg(0, 2, 3, 2));
  s.push_back(seg(1, 2, 4, 2));
  s.push_back(seg(2, 0, 2, 4));
  auto arr = build_arrangement(s, false);
  int horiz = 0;
  for (auto& e : arr.edges) {
    const auto& a = arr.vertices[e.from];
    const auto& b = arr.vertices[e.to];
    if (a.y == Rational(2) && b.y == Rational(2)) ++horiz;
  }
  CHECK(horiz == 4);
  auto arr2 = build_arrangement(s, true);
  int horiz2 = 0;
  for (auto& e : arr2.edges) {
    const auto& a = arr2.vertices[e.from];
    const auto& b = arr2.vertices[e.to];
    if (a.y == Rational(2) && b.y == Rational(2)) ++horiz2;
  }
  CHECK(horiz2 == 2);
}

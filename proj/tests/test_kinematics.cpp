#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rigami/fold3d.hpp"
#include "rigami/kinematics.hpp"
#include "test_helpers.hpp"

using namespace rigami;
using namespace rigami::testing;

namespace {

// ccw supplementary star (alpha, beta, pi-alpha, pi-beta) from rational
// tangent half-angles, optionally tilted by a rational rotation.
std::array<Vec2R, 4> supplementary_star(const Rational& tan_half_alpha, const Rational& tan_half_beta,
                                        const Rational& tilt_tan_half = Rational(0)) {
  RotationR ra = RotationR::from_tan_half(tan_half_alpha);
  RotationR rb = RotationR::from_tan_half(tan_half_beta);
  RotationR g = RotationR::from_tan_half(tilt_tan_half);
  Vec2R u0 = g.apply({Rational(1), Rational(0)});
  Vec2R u1 = ra.apply(u0);
  Vec2R u2 = rb.apply(u1);
  Vec2R u3 = -rb.apply(u0);
  return {u0, u1, u2, u3};
}

}  // namespace

TEST_CASE("paper constants: p(arctan(3/4), 90) = 1/2 exactly") {
  // tan(alpha/2) = 1/3 for alpha = arctan(3/4); beta = 90 so tan(beta/2) = 1
  auto kin = compute_kinematics(supplementary_star(Rational(1, 3), Rational(1)));
  REQUIRE(kin.tan_half_alpha.is_exact());
  CHECK(kin.tan_half_alpha.rat() == Rational(1, 3));
  CHECK(kin.tan_half_beta.rat() == Rational(1));
  CHECK(kin.p_a.rat() == Rational(1, 2));
  CHECK(kin.p_b.rat() == Rational(1, 2));
}

TEST_CASE("paper constants: p(2 arctan(7/9), 90) = 1/8 exactly") {
  auto kin = compute_kinematics(supplementary_star(Rational(7, 9), Rational(1)));
  REQUIRE(kin.p_a.is_exact());
  CHECK(kin.p_a.rat() == Rational(1, 8));
  CHECK(kin.p_b.rat() == Rational(1, 8));
}

TEST_CASE("alpha = beta = 90 gives p_a = p_b = 0") {
  auto kin = compute_kinematics(supplementary_star(Rational(1), Rational(1)));
  CHECK(kin.p_a.rat() == Rational(0));
  CHECK(kin.p_b.rat() == Rational(0));
  CHECK(mode_degenerate(kin, VertexMode::A));
  CHECK(mode_degenerate(kin, VertexMode::B));
}

TEST_CASE("speed coefficient table") {
  auto kin = compute_kinematics(supplementary_star(Rational(1, 3), Rational(1)));  // p = 1/2
  // p(3,0) = t3/t0 = p_a in mode A
  auto r = speed_coefficient(kin, VertexMode::A, 0, 3);
  REQUIRE_FALSE(r.suppressed);
  CHECK(r.value.rat() == Rational(1, 2));
  // p(0,1) = t0/t1 = -1/p_a in mode A
  r = speed_coefficient(kin, VertexMode::A, 1, 0);
  CHECK(r.value.rat() == Rational(-2));
  // mode B table: p(0,1) = -p_b, p(1,2) = 1/p_b, p(2,3) = p_b, p(3,0) = -1/p_b
  r = speed_coefficient(kin, VertexMode::B, 1, 0);
  CHECK(r.value.rat() == Rational(-1, 2));
  r = speed_coefficient(kin, VertexMode::B, 2, 1);
  CHECK(r.value.rat() == Rational(2));
  // suppressed: alpha = beta so p_b = 0; mode B p(1,2) divides by zero speed
  auto kin0 = compute_kinematics(supplementary_star(Rational(2, 5), Rational(2, 5)));
  CHECK(kin0.p_b.rat() == Rational(0));
  r = speed_coefficient(kin0, VertexMode::B, 2, 1);
  CHECK(r.suppressed);
}

TEST_CASE("speed coefficient product around a vertex is 1 in both modes") {
  std::vector<std::pair<Rational, Rational>> cases = {
      {Rational(1, 3), Rational(1)}, {Rational(2, 7), Rational(3, 5)}, {Rational(5, 6), Rational(1, 2)}};
  for (auto& [ta, tb] : cases) {
    auto kin = compute_kinematics(supplementary_star(ta, tb, Rational(1, 9)));
    for (auto mode : {VertexMode::A, VertexMode::B}) {
      Scalar prod = Scalar(Rational(1));
      bool ok = true;
      for (int i = 0; i < 4; ++i) {
        auto r = speed_coefficient(kin, mode, i, (i + 1) % 4);
        if (r.suppressed) { ok = false; break; }
        prod = prod * r.value;
      }
      if (ok) CHECK(prod.rat() == Rational(1));
    }
  }
}

TEST_CASE("single vertex state matches Theorem-1 branches") {
  auto kin = compute_kinematics(supplementary_star(Rational(1, 3), Rational(1)));  // p = 1/2
  auto s0 = single_vertex_state(kin, VertexMode::A, Scalar(Rational(0)));
  for (auto& t : s0) CHECK(t.rat() == Rational(0));
  auto sa = single_vertex_state(kin, VertexMode::A, Scalar(Rational(1)));
  CHECK(sa[0].rat() == Rational(1));
  CHECK(sa[1].rat() == Rational(-1, 2));
  CHECK(sa[2].rat() == Rational(1));
  CHECK(sa[3].rat() == Rational(1, 2));
  auto sb = single_vertex_state(kin, VertexMode::B, Scalar(Rational(1)));
  CHECK(sb[0].rat() == Rational(-1, 2));
  CHECK(sb[1].rat() == Rational(1));
  CHECK(sb[2].rat() == Rational(1, 2));
  CHECK(sb[3].rat() == Rational(1));
}

TEST_CASE("p bounds: |p| < 1 always; strict-min alpha gives p in (0,1)") {
  std::vector<Rational> ts = {Rational(1, 5), Rational(1, 3), Rational(1, 2), Rational(3, 4), Rational(9, 10)};
  for (auto& ta : ts)
    for (auto& tb : ts) {
      auto kin = compute_kinematics(supplementary_star(ta, tb));
      CHECK(kin.p_a.abs().rat() < Rational(1));
      CHECK(kin.p_b.abs().rat() < Rational(1));
      if (ta < tb && ta * tb < Rational(1)) {
        // alpha < beta and alpha < pi - beta: alpha strictly smallest
        CHECK(kin.p_a.rat() > Rational(0));
        CHECK(kin.p_b.rat() > Rational(0));
      }
    }
}

TEST_CASE("opposite angle relations (Lemma shape)") {
  Scalar x = Rational(3, 10), y = Rational(1, 5);
  CHECK(opposite_angle_relations({x, -y, x, y}));
  CHECK(opposite_angle_relations({-y, x, y, x}));
  CHECK_FALSE(opposite_angle_relations({Scalar(Rational(1, 10)), Scalar(Rational(2, 10)),
                                        Scalar(Rational(3, 10)), Scalar(Rational(4, 10))}));
}

TEST_CASE("lemma relations hold identically along both branches") {
  auto kin = compute_kinematics(supplementary_star(Rational(2, 7), Rational(3, 5)));
  for (auto mode : {VertexMode::A, VertexMode::B}) {
    for (int k = -5; k <= 5; ++k) {
      if (k == 0) continue;
      Scalar t = Rational(k, 5);
      auto s = single_vertex_state(kin, mode, t);
      // tangent half-angles obey the same sign relations as the angles
      CHECK(opposite_angle_relations(s));
    }
  }
}

TEST_CASE("single-vertex loop closure residual is tiny for valid states") {
  Scalar::PrecisionGuard g(128);
  auto dirs = supplementary_star(Rational(1, 3), Rational(1));  // alpha = arctan(3/4), beta = 90
  auto kin = compute_kinematics(dirs);
  std::vector<std::pair<Scalar, Scalar>> cs;
  for (int i = 0; i < 4; ++i) {
    auto [c, s] = cos_sin_between(dirs[i], dirs[(i + 1) % 4]);
    cs.push_back({c, s});
  }
  auto st = single_vertex_state(kin, VertexMode::A, Scalar(Rational(3, 10)));
  Rational res = vertex_loop_residual(cs, {st[0], st[1], st[2], st[3]}, 128);
  CHECK(res < Rational(1, BigInt("1000000000000")));  // <= 1e-12
  // a wrong state does not close
  auto bad = st;
  bad[1] = bad[1] * Scalar(Rational(2));
  Rational res_bad = vertex_loop_residual(cs, {bad[0], bad[1], bad[2], bad[3]}, 128);
  CHECK(res_bad > Rational(1, 1000));
}

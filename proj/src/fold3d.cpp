#include "rigami/fold3d.hpp"

#include <deque>

namespace rigami {

namespace {

Interval iv_const(long v, mpfr_prec_t prec) { return Interval::from_long(v, prec); }

}  // namespace

Mat3I Mat3I::identity(mpfr_prec_t prec) {
  Mat3I r{{iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec),
           iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec)}};
  for (int i = 0; i < 3; ++i) r.m[4 * i] = iv_const(1, prec);
  return r;
}

Mat3I Mat3I::mul(const Mat3I& o) const {
  mpfr_prec_t prec = m[0].precision();
  Mat3I r{{iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec),
           iv_const(0, prec), iv_const(0, prec), iv_const(0, prec), iv_const(0, prec)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Interval acc = m[3 * i] * o.m[j];
      acc = acc + m[3 * i + 1] * o.m[3 + j];
      acc = acc + m[3 * i + 2] * o.m[6 + j];
      r.m[3 * i + j] = acc;
    }
  return r;
}

Rational Mat3I::max_abs_diff(const Mat3I& o) const {
  Rational best(0);
  for (int i = 0; i < 9; ++i) {
    Rational hi = (m[i] - o.m[i]).abs().hi_rational();
    if (hi > best) best = hi;
  }
  return best;
}

Vec3I Vec3I::zero(mpfr_prec_t prec) { return {{iv_const(0, prec), iv_const(0, prec), iv_const(0, prec)}}; }

Placement Placement::identity(mpfr_prec_t prec) { return {Mat3I::identity(prec), Vec3I::zero(prec)}; }

Placement Placement::compose(const Placement& o) const {
  Placement r{R.mul(o.R), t};
  for (int i = 0; i < 3; ++i) {
    Interval acc = R.m[3 * i] * o.t.v[0] + R.m[3 * i + 1] * o.t.v[1] + R.m[3 * i + 2] * o.t.v[2];
    r.t.v[i] = acc + t.v[i];
  }
  return r;
}

Rational Placement::max_abs_diff(const Placement& o) const {
  Rational best = R.max_abs_diff(o.R);
  for (int i = 0; i < 3; ++i) {
    Rational hi = (t.v[i] - o.t.v[i]).abs().hi_rational();
    if (hi > best) best = hi;
  }
  return best;
}

Mat3I rot_z(const Interval& c, const Interval& s, mpfr_prec_t prec) {
  Mat3I r = Mat3I::identity(prec);
  r.m[0] = c;
  r.m[1] = -s;
  r.m[3] = s;
  r.m[4] = c;
  r.m[8] = iv_const(1, prec);
  return r;
}

Mat3I rot_x_tan_half(const Scalar& t, mpfr_prec_t prec) {
  Scalar t2 = t * t;
  Scalar den = Scalar(1) + t2;
  Interval c = ((Scalar(1) - t2) / den).to_interval(prec);
  Interval s = ((t * Scalar(2)) / den).to_interval(prec);
  Mat3I r = Mat3I::identity(prec);
  r.m[4] = c;
  r.m[5] = -s;
  r.m[7] = s;
  r.m[8] = c;
  return r;
}

Placement rotation_about_line(const Vec2R& a, const Vec2R& b, const Scalar& t, mpfr_prec_t prec) {
  Vec2R d = b - a;
  Scalar t2 = t * t;
  Scalar den = Scalar(1) + t2;
  Interval c = ((Scalar(1) - t2) / den).to_interval(prec);
  Interval s = ((t * Scalar(2)) / den).to_interval(prec);
  Interval L = Interval::from_rational(norm2(d), prec).sqrt();
  Interval ux = Interval::from_rational(d.x, prec) / L;
  Interval uy = Interval::from_rational(d.y, prec) / L;
  Interval one = iv_const(1, prec);
  Interval omc = one - c;  // 1 - cos
  // Rodrigues for an axis (ux, uy, 0)
  Mat3I R{{one - omc * (uy * uy), omc * (ux * uy), s * uy,
           omc * (ux * uy), one - omc * (ux * ux), -(s * ux),
           -(s * uy), s * ux, c}};
  Placement p{R, Vec3I::zero(prec)};
  // translation: a - R a (line passes through a, z = 0)
  Interval ax = Interval::from_rational(a.x, prec), ay = Interval::from_rational(a.y, prec);
  p.t.v[0] = ax - (R.m[0] * ax + R.m[1] * ay);
  p.t.v[1] = ay - (R.m[3] * ax + R.m[4] * ay);
  p.t.v[2] = -(R.m[6] * ax + R.m[7] * ay);
  return p;
}

Rational vertex_loop_residual(const std::vector<std::pair<Scalar, Scalar>>& sector_cos_sin,
                              const std::vector<Scalar>& tan_half_rho, mpfr_prec_t prec) {
  if (sector_cos_sin.size() != tan_half_rho.size())
    fail(ErrorKind::Internal, "vertex_loop_residual arity mismatch");
  Mat3I acc = Mat3I::identity(prec);
  for (size_t i = 0; i < tan_half_rho.size(); ++i) {
    acc = acc.mul(rot_x_tan_half(tan_half_rho[i], prec));
    acc = acc.mul(rot_z(sector_cos_sin[i].first.to_interval(prec),
                        sector_cos_sin[i].second.to_interval(prec), prec));
  }
  return acc.max_abs_diff(Mat3I::identity(prec));
}

FoldState3D fold_state_3d(const CreasePattern& p, const ModeCertificate& cert, const Scalar& t,
                          mpfr_prec_t prec) {
  FoldState3D st;
  st.parameter = t;
  st.max_residual = Rational(0);

  // tangent half-angle of each crease at this parameter
  std::map<int, Scalar> th;
  for (int e = 0; e < p.edge_count(); ++e) {
    if (!p.is_crease(e)) continue;
    auto it = cert.speeds.find(e);
    Scalar te = (it == cert.speeds.end()) ? Scalar(Rational(0)) : it->second * t;
    th[e] = te;
    st.fold_angles[e] = te.atan() * Scalar(2);
  }

  // face adjacency over creases; left face of each directed edge
  const auto& faces = p.faces();
  int nf = static_cast<int>(faces.size());
  // directed edge key: 2e (from->to) / 2e+1 (to->from) -> face on its left
  std::map<int, int> left_face;
  for (int f = 0; f < nf; ++f) {
    for (size_t i = 0; i < faces[f].corners.size(); ++i) {
      int e = faces[f].corners[i].edge;
      int v = faces[f].corners[i].vertex;
      int de = (p.edges()[e].from == v) ? 2 * e : 2 * e + 1;
      left_face[de] = f;
    }
  }

  std::vector<int> state(nf, -1);  // -1 unknown
  std::vector<Placement> plc(nf, Placement::identity(prec));
  std::deque<int> queue;
  state[0] = 1;
  queue.push_back(0);
  std::vector<std::pair<int, std::pair<int, int>>> cross_checks;  // (crease, (fL, fR))
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (const auto& c : faces[f].corners) {
      int e = c.edge;
      if (!p.is_crease(e)) continue;
      int de_fwd = 2 * e, de_rev = 2 * e + 1;
      auto itL = left_face.find(de_fwd);
      auto itR = left_face.find(de_rev);
      if (itL == left_face.end() || itR == left_face.end()) continue;  // borders the outer face
      int fL = itL->second, fR = itR->second;
      int g = (fL == f) ? fR : fL;
      if (state[g] == -1) {
        // P_left = P_right ∘ Rot(from->to, rho)
        const Vec2R& a = p.vertices()[p.edges()[e].from];
        const Vec2R& b = p.vertices()[p.edges()[e].to];
        if (g == fL) {
          plc[g] = plc[fR].compose(rotation_about_line(a, b, th[e], prec));
        } else {
          plc[g] = plc[fL].compose(rotation_about_line(b, a, th[e], prec));
        }
        state[g] = 1;
        queue.push_back(g);
      } else {
        cross_checks.push_back({e, {fL, fR}});
      }
    }
  }
  for (const auto& [e, lr] : cross_checks) {
    const Vec2R& a = p.vertices()[p.edges()[e].from];
    const Vec2R& b = p.vertices()[p.edges()[e].to];
    Placement expect = plc[lr.second].compose(rotation_about_line(a, b, th[e], prec));
    Rational r = plc[lr.first].max_abs_diff(expect);
    if (r > st.max_residual) st.max_residual = r;
  }
  for (int f = 0; f < nf; ++f) st.face_placements.emplace(f, plc[f]);
  return st;
}

}  // namespace rigami

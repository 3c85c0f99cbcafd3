#include "rigami/flat_fold.hpp"

namespace rigami {

bool kawasaki_check_degree4(const std::array<Vec2R, 4>& dirs_ccw) {
  Vec2R w = dirs_ccw[0];
  for (int i = 1; i < 4; ++i) w = reflect(w, dirs_ccw[i]);
  return w == dirs_ccw[0];
}

bool kawasaki_check_degree4(const CreasePattern& p, int v) {
  if (!p.is_interior_vertex(v) || p.degree(v) != 4)
    fail(ErrorKind::Validate, "kawasaki_check_degree4 needs an interior degree-4 vertex");
  VertexStar s = p.vertex_star(v);
  return kawasaki_check_degree4({s.directions[0], s.directions[1], s.directions[2], s.directions[3]});
}

VertexClass classify_vertex(const CreasePattern& p, int v) {
  VertexClass c;
  if (!p.is_interior_vertex(v)) {
    c.kind = VertexKind::Boundary;
    return c;
  }
  int deg = p.degree(v);
  if (deg == 2) {
    const auto& inc = p.incident_ccw(v);
    Vec2R d0 = p.edge_dir_from(inc[0], v);
    Vec2R d1 = p.edge_dir_from(inc[1], v);
    if (opposite_direction(d0, d1)) {
      c.kind = VertexKind::CollinearPair;
      return c;
    }
    c.kind = VertexKind::Other;
    return c;
  }
  if (deg == 4) {
    VertexStar s = p.vertex_star(v);
    if (kawasaki_check_degree4({s.directions[0], s.directions[1], s.directions[2], s.directions[3]})) {
      c.kind = VertexKind::Degree4FlatFoldable;
      c.alpha = s.sector_angles[0];
      c.beta = s.sector_angles[1];
      return c;
    }
  }
  c.kind = VertexKind::Other;
  return c;
}

const char* vertex_kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Degree4FlatFoldable: return "degree4-flat-foldable";
    case VertexKind::CollinearPair: return "collinear-pair";
    case VertexKind::Boundary: return "boundary";
    case VertexKind::Other: return "other";
  }
  return "?";
}

}  // namespace rigami

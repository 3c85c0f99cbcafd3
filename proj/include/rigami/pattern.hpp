#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "rigami/geom.hpp"

namespace rigami {

enum class EdgeKind { Mountain, Valley, Unassigned, Border };

char edge_kind_char(EdgeKind k);
EdgeKind edge_kind_from_char(char c);

struct Edge {
  int from = -1, to = -1;
  EdgeKind kind = EdgeKind::Unassigned;
};

// One bounded face, as a ccw cycle. corners[i].edge is the pattern edge from
// corners[i].vertex to corners[i+1].vertex along the cycle.
struct FaceCorner {
  int vertex;
  int edge;
};
struct Face {
  std::vector<FaceCorner> corners;
  bool all_corners_interior = false;
};

// Star of an interior vertex: incident creases in ccw order, rotated so the
// smallest crease id comes first.
struct VertexStar {
  int center = -1;
  std::vector<int> creases;        // edge ids
  std::vector<Vec2R> directions;   // unit-free direction vectors, same order
  std::vector<Scalar> sector_angles;  // angle from creases[i] to creases[i+1]
};

// Immutable planar straight-line crease pattern on a polygon. Validated and
// face-extracted at construction; everything downstream shares it read-only.
class CreasePattern {
public:
  static CreasePattern build(std::vector<Vec2R> vertices, std::vector<Edge> edges,
                             std::vector<int> boundary, nlohmann::json meta = nlohmann::json::object());

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Vec2R>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& boundary() const { return boundary_; }
  const std::vector<Face>& faces() const { return faces_; }
  const nlohmann::json& meta() const { return meta_; }
  nlohmann::json& meta_mut() { return meta_; }

  bool is_border_edge(int e) const { return edges_[e].kind == EdgeKind::Border; }
  bool is_crease(int e) const { return !is_border_edge(e); }
  bool is_interior_vertex(int v) const { return interior_vertex_[v]; }

  // Incident edge ids sorted ccw by direction (all edges, border included).
  const std::vector<int>& incident_ccw(int v) const { return incident_[v]; }
  int degree(int v) const { return static_cast<int>(incident_[v].size()); }

  Vec2R edge_dir_from(int e, int v) const;  // direction of edge e leaving vertex v
  int other_end(int e, int v) const;

  VertexStar vertex_star(int v) const;

  std::vector<int> crease_ids() const;

private:
  CreasePattern() = default;
  void validate_and_derive();

  std::vector<Vec2R> vertices_;
  std::vector<Edge> edges_;
  std::vector<int> boundary_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> incident_;
  std::vector<bool> interior_vertex_;
  nlohmann::json meta_;
};

// Building blocks shared with the arrangement and solver.
bool segments_properly_interact(const Vec2R& a, const Vec2R& b, const Vec2R& c, const Vec2R& d);

}  // namespace rigami

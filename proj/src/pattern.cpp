#include "rigami/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rigami {

char edge_kind_char(EdgeKind k) {
  switch (k) {
    case EdgeKind::Mountain: return 'M';
    case EdgeKind::Valley: return 'V';
    case EdgeKind::Unassigned: return 'U';
    case EdgeKind::Border: return 'B';
  }
  fail(ErrorKind::Internal, "bad edge kind");
}

EdgeKind edge_kind_from_char(char c) {
  switch (c) {
    case 'M': return EdgeKind::Mountain;
    case 'V': return EdgeKind::Valley;
    case 'U': return EdgeKind::Unassigned;
    case 'B': return EdgeKind::Border;
  }
  fail(ErrorKind::Parse, std::string("bad edge assignment '") + c + "'");
}

namespace {

struct BBox {
  Rational xmin, xmax, ymin, ymax;
};

BBox seg_bbox(const Vec2R& a, const Vec2R& b) {
  return {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
}

bool bbox_overlap(const BBox& p, const BBox& q) {
  return !(p.xmax < q.xmin || q.xmax < p.xmin || p.ymax < q.ymin || q.ymax < p.ymin);
}

// 1 if point p lies on closed segment [a,b]
bool point_on_segment(const Vec2R& p, const Vec2R& a, const Vec2R& b) {
  if (cross(b - a, p - a).sign() != 0) return false;
  return dot(p - a, p - b).sign() <= 0;
}

}  // namespace

// True iff the two closed segments intersect anywhere other than at shared
// endpoints. Exact.
bool segments_properly_interact(const Vec2R& a, const Vec2R& b, const Vec2R& c, const Vec2R& d) {
  if (!bbox_overlap(seg_bbox(a, b), seg_bbox(c, d))) return false;
  Vec2R r = b - a, s = d - c;
  Rational denom = cross(r, s);
  bool share_a = (a == c || a == d);
  bool share_b = (b == c || b == d);
  if (denom.sign() != 0) {
    Rational t_num = cross(c - a, s), u_num = cross(c - a, r);
    // t = t_num/denom in [0,1], u = u_num/denom in [0,1]
    Rational t = t_num / denom, u = u_num / denom;
    if (t < Rational(0) || t > Rational(1) || u < Rational(0) || u > Rational(1)) return false;
    // touching exactly at a shared endpoint is fine
    bool at_ab_end = (t == Rational(0) || t == Rational(1));
    bool at_cd_end = (u == Rational(0) || u == Rational(1));
    if (at_ab_end && at_cd_end) {
      Vec2R p = a + r * t;
      if ((share_a && (p == a)) || (share_b && (p == b))) return false;
    }
    return true;
  }
  // parallel
  if (cross(c - a, r).sign() != 0) return false;  // distinct parallel lines
  // collinear: any overlap beyond shared endpoints is an interaction
  int on = 0;
  if (point_on_segment(c, a, b) && c != a && c != b) return true;
  if (point_on_segment(d, a, b) && d != a && d != b) return true;
  if (point_on_segment(a, c, d) && a != c && a != d) return true;
  if (point_on_segment(b, c, d) && b != c && b != d) return true;
  // segments share both endpoints => duplicate edge, caught elsewhere
  on = (share_a ? 1 : 0) + (share_b ? 1 : 0);
  return on == 2;
}

Vec2R CreasePattern::edge_dir_from(int e, int v) const {
  const Edge& ed = edges_[e];
  if (ed.from == v) return vertices_[ed.to] - vertices_[ed.from];
  if (ed.to == v) return vertices_[ed.from] - vertices_[ed.to];
  fail(ErrorKind::Internal, "edge not incident to vertex");
}

int CreasePattern::other_end(int e, int v) const {
  const Edge& ed = edges_[e];
  if (ed.from == v) return ed.to;
  if (ed.to == v) return ed.from;
  fail(ErrorKind::Internal, "edge not incident to vertex");
}

std::vector<int> CreasePattern::crease_ids() const {
  std::vector<int> out;
  for (int e = 0; e < edge_count(); ++e)
    if (is_crease(e)) out.push_back(e);
  return out;
}

CreasePattern CreasePattern::build(std::vector<Vec2R> vertices, std::vector<Edge> edges,
                                   std::vector<int> boundary, nlohmann::json meta) {
  CreasePattern p;
  p.vertices_ = std::move(vertices);
  p.edges_ = std::move(edges);
  p.boundary_ = std::move(boundary);
  p.meta_ = std::move(meta);
  p.validate_and_derive();
  return p;
}

void CreasePattern::validate_and_derive() {
  const int nv = vertex_count();
  const int ne = edge_count();
  if (nv == 0 || ne == 0) fail(ErrorKind::Validate, "empty pattern");

  // distinct coordinates
  {
    std::map<std::pair<std::string, std::string>, int> seen;
    for (int i = 0; i < nv; ++i) {
      auto key = std::make_pair(vertices_[i].x.str(), vertices_[i].y.str());
      if (!seen.emplace(key, i).second)
        fail(ErrorKind::Validate, "duplicate vertex coordinates at vertex " + std::to_string(i));
    }
  }

  std::set<std::pair<int, int>> seen_edges;
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = edges_[e];
    if (ed.from < 0 || ed.from >= nv || ed.to < 0 || ed.to >= nv)
      fail(ErrorKind::Validate, "edge " + std::to_string(e) + " has out-of-range endpoint");
    if (ed.from == ed.to) fail(ErrorKind::Validate, "zero-length edge " + std::to_string(e));
    auto key = std::minmax(ed.from, ed.to);
    if (!seen_edges.insert({key.first, key.second}).second)
      fail(ErrorKind::Validate, "duplicate edge " + std::to_string(e));
  }

  // non-crossing embedding (bucketed exact pair test); also forbids a vertex
  // sitting in the interior of an edge
  {
    const Rational BUCKET(8);
    std::map<std::pair<long, long>, std::vector<int>> buckets;
    auto bucket_range = [&](const Vec2R& a, const Vec2R& b) {
      BBox bb = seg_bbox(a, b);
      long x0 = static_cast<long>((bb.xmin / BUCKET).floor().get_si());
      long x1 = static_cast<long>((bb.xmax / BUCKET).floor().get_si());
      long y0 = static_cast<long>((bb.ymin / BUCKET).floor().get_si());
      long y1 = static_cast<long>((bb.ymax / BUCKET).floor().get_si());
      return std::tuple<long, long, long, long>(x0, x1, y0, y1);
    };
    for (int e = 0; e < ne; ++e) {
      auto [x0, x1, y0, y1] = bucket_range(vertices_[edges_[e].from], vertices_[edges_[e].to]);
      for (long bx = x0; bx <= x1; ++bx)
        for (long by = y0; by <= y1; ++by) buckets[{bx, by}].push_back(e);
    }
    std::set<std::pair<int, int>> tested;
    for (auto& [key, list] : buckets) {
      for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
          int e1 = list[i], e2 = list[j];
          if (!tested.insert(std::minmax(e1, e2)).second) continue;
          if (segments_properly_interact(vertices_[edges_[e1].from], vertices_[edges_[e1].to],
                                         vertices_[edges_[e2].from], vertices_[edges_[e2].to]))
            fail(ErrorKind::Validate, "edges " + std::to_string(e1) + " and " + std::to_string(e2) +
                                          " cross or overlap");
        }
    }
    // vertex in edge interior (bucketed by vertex position)
    {
      std::map<std::pair<long, long>, std::vector<int>> vbuckets;
      for (int v = 0; v < nv; ++v) {
        long bx = static_cast<long>((vertices_[v].x / BUCKET).floor().get_si());
        long by = static_cast<long>((vertices_[v].y / BUCKET).floor().get_si());
        vbuckets[{bx, by}].push_back(v);
      }
      for (int e = 0; e < ne; ++e) {
        const Vec2R& a = vertices_[edges_[e].from];
        const Vec2R& b = vertices_[edges_[e].to];
        auto [x0, x1, y0, y1] = bucket_range(a, b);
        for (long bx = x0; bx <= x1; ++bx)
          for (long by = y0; by <= y1; ++by) {
            auto it = vbuckets.find({bx, by});
            if (it == vbuckets.end()) continue;
            for (int v : it->second) {
              if (v == edges_[e].from || v == edges_[e].to) continue;
              if (point_on_segment(vertices_[v], a, b))
                fail(ErrorKind::Validate,
                     "vertex " + std::to_string(v) + " lies inside edge " + std::to_string(e));
            }
          }
      }
    }
  }

  // incidence lists, ccw sorted
  incident_.assign(nv, {});
  for (int e = 0; e < ne; ++e) {
    incident_[edges_[e].from].push_back(e);
    incident_[edges_[e].to].push_back(e);
  }
  for (int v = 0; v < nv; ++v) {
    if (incident_[v].empty()) fail(ErrorKind::Validate, "isolated vertex " + std::to_string(v));
    std::sort(incident_[v].begin(), incident_[v].end(), [&](int e1, int e2) {
      int c = angle_compare(edge_dir_from(e1, v), edge_dir_from(e2, v));
      if (c != 0) return c < 0;
      fail(ErrorKind::Validate, "two edges with identical direction at vertex " + std::to_string(v));
    });
  }

  // connectivity
  {
    std::vector<bool> vis(nv, false);
    std::vector<int> stack{0};
    vis[0] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int e : incident_[v]) {
        int w = other_end(e, v);
        if (!vis[w]) {
          vis[w] = true;
          stack.push_back(w);
        }
      }
    }
    for (int v = 0; v < nv; ++v)
      if (!vis[v]) fail(ErrorKind::Validate, "pattern graph is disconnected");
  }

  // border cycle must match the declared boundary polygon
  {
    std::map<int, std::vector<int>> border_adj;
    int nb = 0;
    for (int e = 0; e < ne; ++e) {
      if (edges_[e].kind != EdgeKind::Border) continue;
      ++nb;
      border_adj[edges_[e].from].push_back(edges_[e].to);
      border_adj[edges_[e].to].push_back(edges_[e].from);
    }
    if (boundary_.size() < 3) fail(ErrorKind::Validate, "boundary polygon needs at least 3 vertices");
    if (static_cast<size_t>(nb) != boundary_.size())
      fail(ErrorKind::Validate, "border edge count does not match boundary polygon size");
    for (auto& [v, nbrs] : border_adj)
      if (nbrs.size() != 2) fail(ErrorKind::Validate, "border edges do not form a simple cycle");
    // walk the declared boundary and check each consecutive pair is a border edge
    std::set<std::pair<int, int>> border_set;
    for (int e = 0; e < ne; ++e)
      if (edges_[e].kind == EdgeKind::Border) {
        auto mm = std::minmax(edges_[e].from, edges_[e].to);
        border_set.insert({mm.first, mm.second});
      }
    for (size_t i = 0; i < boundary_.size(); ++i) {
      int a = boundary_[i], b = boundary_[(i + 1) % boundary_.size()];
      auto mm = std::minmax(a, b);
      if (!border_set.count({mm.first, mm.second}))
        fail(ErrorKind::Validate, "boundary polygon edge " + std::to_string(a) + "-" + std::to_string(b) +
                                      " is not a Border edge");
    }
  }

  // interior flags: a vertex is interior iff it has no incident border edge
  interior_vertex_.assign(nv, true);
  for (int e = 0; e < ne; ++e)
    if (edges_[e].kind == EdgeKind::Border) {
      interior_vertex_[edges_[e].from] = false;
      interior_vertex_[edges_[e].to] = false;
    }

  // every crease must lie inside the boundary polygon: exact point-in-polygon
  // on the midpoint (strict) and endpoints (non-strict)
  {
    // fast path for an axis-aligned rectangular boundary
    bool rect = true;
    Rational rx0, rx1, ry0, ry1;
    {
      size_t m = boundary_.size();
      rx0 = rx1 = vertices_[boundary_[0]].x;
      ry0 = ry1 = vertices_[boundary_[0]].y;
      Rational area2(0);
      for (size_t i = 0; i < m; ++i) {
        const Vec2R& a = vertices_[boundary_[i]];
        const Vec2R& b = vertices_[boundary_[(i + 1) % m]];
        if (a.x != b.x && a.y != b.y) rect = false;
        area2 += cross(a, b);
        rx0 = std::min(rx0, a.x);
        rx1 = std::max(rx1, a.x);
        ry0 = std::min(ry0, a.y);
        ry1 = std::max(ry1, a.y);
      }
      // the fast path is only valid when the boundary really is the bbox
      if (area2.abs() != (rx1 - rx0) * (ry1 - ry0) * Rational(2)) rect = false;
    }
    auto point_in_rect = [&](const Vec2R& p) -> int {
      if (p.x < rx0 || p.x > rx1 || p.y < ry0 || p.y > ry1) return -1;
      if (p.x == rx0 || p.x == rx1 || p.y == ry0 || p.y == ry1) return 0;
      return 1;
    };
    auto point_in_poly = [&](const Vec2R& p) -> int {
      // 1 inside, 0 on boundary, -1 outside; exact crossing-number walk
      bool on = false;
      int crossings = 0;
      size_t m = boundary_.size();
      for (size_t i = 0; i < m; ++i) {
        const Vec2R& a = vertices_[boundary_[i]];
        const Vec2R& b = vertices_[boundary_[(i + 1) % m]];
        if (point_on_segment(p, a, b)) {
          on = true;
          break;
        }
        // count crossings of upward edges with the rightward ray from p
        bool a_below = a.y <= p.y, b_below = b.y <= p.y;
        if (a_below == b_below) continue;
        // x coordinate of intersection with horizontal line y = p.y
        Rational t = (p.y - a.y) / (b.y - a.y);
        Rational xi = a.x + (b.x - a.x) * t;
        if (xi > p.x) ++crossings;
      }
      if (on) return 0;
      return (crossings % 2 == 1) ? 1 : -1;
    };
    auto inside = [&](const Vec2R& p) { return rect ? point_in_rect(p) : point_in_poly(p); };
    for (int e = 0; e < ne; ++e) {
      if (edges_[e].kind == EdgeKind::Border) continue;
      const Vec2R& a = vertices_[edges_[e].from];
      const Vec2R& b = vertices_[edges_[e].to];
      Vec2R mid{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)};
      if (inside(mid) != 1)
        fail(ErrorKind::Validate, "crease " + std::to_string(e) + " is not interior to the boundary polygon");
      if (inside(a) < 0 || inside(b) < 0)
        fail(ErrorKind::Validate, "crease " + std::to_string(e) + " has an endpoint outside the boundary");
    }
  }

  // face extraction: next-edge walk on the rotation system, bounded faces ccw
  {
    // directed edge id: 2*e (from->to) and 2*e+1 (to->from)
    auto dir_tail = [&](int de) { return (de & 1) ? edges_[de >> 1].to : edges_[de >> 1].from; };
    auto dir_head = [&](int de) { return (de & 1) ? edges_[de >> 1].from : edges_[de >> 1].to; };
    // position of each directed edge in head vertex ccw order
    std::vector<std::map<int, int>> pos(nv);  // vertex -> edge id -> index in incident_
    for (int v = 0; v < nv; ++v)
      for (size_t i = 0; i < incident_[v].size(); ++i) pos[v][incident_[v][i]] = static_cast<int>(i);

    std::vector<bool> used(2 * ne, false);
    int neg_faces = 0;
    for (int start = 0; start < 2 * ne; ++start) {
      if (used[start]) continue;
      std::vector<int> cycle;  // directed edges
      int de = start;
      do {
        used[de] = true;
        cycle.push_back(de);
        int v = dir_head(de);
        int e = de >> 1;
        // reverse edge at v, then step one position clockwise (ccw predecessor)
        int idx = pos[v][e];
        int n = static_cast<int>(incident_[v].size());
        int next_e = incident_[v][(idx - 1 + n) % n];
        int next_de = (edges_[next_e].from == v) ? 2 * next_e : 2 * next_e + 1;
        de = next_de;
      } while (de != start);
      // signed area
      Rational area2(0);
      for (int d : cycle) {
        const Vec2R& a = vertices_[dir_tail(d)];
        const Vec2R& b = vertices_[dir_head(d)];
        area2 += cross(a, b);
      }
      if (area2.sign() > 0) {
        Face f;
        f.all_corners_interior = true;
        for (int d : cycle) {
          FaceCorner c;
          c.vertex = dir_tail(d);
          c.edge = d >> 1;
          if (!interior_vertex_[c.vertex]) f.all_corners_interior = false;
          f.corners.push_back(c);
        }
        faces_.push_back(std::move(f));
      } else {
        ++neg_faces;
      }
    }
    if (neg_faces != 1)
      fail(ErrorKind::Validate, "face walk found " + std::to_string(neg_faces) +
                                    " outer faces (expected 1); embedding is inconsistent");
    // Euler: V - E + (F_bounded + 1) = 2
    if (nv - ne + static_cast<int>(faces_.size()) + 1 != 2)
      fail(ErrorKind::Validate, "Euler characteristic check failed");
  }

  // no interior vertex of degree 1 (dangling crease)
  for (int v = 0; v < nv; ++v)
    if (interior_vertex_[v] && degree(v) < 2)
      fail(ErrorKind::Validate, "dangling crease at vertex " + std::to_string(v));
}

VertexStar CreasePattern::vertex_star(int v) const {
  if (!is_interior_vertex(v)) fail(ErrorKind::Validate, "vertex_star of boundary vertex " + std::to_string(v));
  VertexStar s;
  s.center = v;
  s.creases = incident_[v];  // already ccw
  // rotate so the smallest crease id is first
  auto it = std::min_element(s.creases.begin(), s.creases.end());
  std::rotate(s.creases.begin(), it, s.creases.end());
  for (int e : s.creases) s.directions.push_back(edge_dir_from(e, v));
  size_t k = s.creases.size();
  for (size_t i = 0; i < k; ++i)
    s.sector_angles.push_back(angle_between_ccw(s.directions[i], s.directions[(i + 1) % k]));
  return s;
}

}  // namespace rigami

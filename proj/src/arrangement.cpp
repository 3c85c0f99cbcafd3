#include "rigami/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rigami {

namespace {

struct PointKey {
  std::string x, y;
  bool operator<(const PointKey& o) const { return x != o.x ? x < o.x : y < o.y; }
};

PointKey key_of(const Vec2R& p) { return {p.x.str(), p.y.str()}; }

}  // namespace

ArrangementResult build_arrangement(const std::vector<ArrSegment>& segs, bool dissolve_collinear_joints) {
  const size_t n = segs.size();
  for (const auto& s : segs)
    if (s.a == s.b) fail(ErrorKind::Internal, "zero-length segment in arrangement input");

  // bucket segments by 8x8 cells of their bbox
  const Rational BUCKET(8);
  std::map<std::pair<long, long>, std::vector<int>> buckets;
  for (size_t i = 0; i < n; ++i) {
    Rational x0 = std::min(segs[i].a.x, segs[i].b.x), x1 = std::max(segs[i].a.x, segs[i].b.x);
    Rational y0 = std::min(segs[i].a.y, segs[i].b.y), y1 = std::max(segs[i].a.y, segs[i].b.y);
    long bx0 = static_cast<long>((x0 / BUCKET).floor().get_si());
    long bx1 = static_cast<long>((x1 / BUCKET).floor().get_si());
    long by0 = static_cast<long>((y0 / BUCKET).floor().get_si());
    long by1 = static_cast<long>((y1 / BUCKET).floor().get_si());
    for (long bx = bx0; bx <= bx1; ++bx)
      for (long by = by0; by <= by1; ++by) buckets[{bx, by}].push_back(static_cast<int>(i));
  }

  // cut parameters per segment
  std::vector<std::vector<Rational>> cuts(n);
  auto add_cut = [&](int i, const Rational& t) {
    if (t > Rational(0) && t < Rational(1)) cuts[i].push_back(t);
  };
  auto param_on = [&](int i, const Vec2R& p) -> Rational {
    Vec2R r = segs[i].b - segs[i].a;
    return dot(p - segs[i].a, r) / dot(r, r);
  };

  std::set<std::pair<int, int>> done;
  for (auto& [bk, list] : buckets) {
    for (size_t ii = 0; ii < list.size(); ++ii) {
      for (size_t jj = ii + 1; jj < list.size(); ++jj) {
        int i = list[ii], j = list[jj];
        if (!done.insert(std::minmax(i, j)).second) continue;
        const Vec2R &a = segs[i].a, &b = segs[i].b, &c = segs[j].a, &d = segs[j].b;
        Vec2R r = b - a, s = d - c;
        Rational denom = cross(r, s);
        if (denom.sign() != 0) {
          Rational t = cross(c - a, s) / denom;
          Rational u = cross(c - a, r) / denom;
          if (t >= Rational(0) && t <= Rational(1) && u >= Rational(0) && u <= Rational(1)) {
            add_cut(i, t);
            add_cut(j, u);
          }
        } else if (cross(c - a, r).sign() == 0) {
          // collinear: cut each at the other's endpoints (if interior)
          add_cut(i, param_on(i, c));
          add_cut(i, param_on(i, d));
          add_cut(j, param_on(j, a));
          add_cut(j, param_on(j, b));
        }
      }
    }
  }

  // emit pieces, dedupe by canonical endpoint pair
  std::map<PointKey, int> vid;
  std::vector<Vec2R> vertices;
  auto intern = [&](const Vec2R& p) {
    auto k = key_of(p);
    auto it = vid.find(k);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(vertices.size());
    vertices.push_back(p);
    vid.emplace(k, id);
    return id;
  };

  struct PieceInfo {
    EdgeKind kind;
    std::set<int> tags;
  };
  std::map<std::pair<int, int>, PieceInfo> pieces;
  for (size_t i = 0; i < n; ++i) {
    auto& cs = cuts[i];
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    Vec2R r = segs[i].b - segs[i].a;
    Vec2R prev = segs[i].a;
    auto flush = [&](const Vec2R& next) {
      if (prev == next) return;
      int u = intern(prev), v = intern(next);
      auto kk = std::minmax(u, v);
      auto [it, fresh] = pieces.try_emplace({kk.first, kk.second}, PieceInfo{segs[i].kind, {}});
      if (!fresh && it->second.kind != segs[i].kind) {
        // border beats crease when a stub coincides with the frame; anything
        // else is a construction bug
        if (segs[i].kind == EdgeKind::Border || it->second.kind == EdgeKind::Border)
          it->second.kind = EdgeKind::Border;
        else
          fail(ErrorKind::Internal, "conflicting edge kinds on coincident segments");
      }
      if (segs[i].tag >= 0) it->second.tags.insert(segs[i].tag);
      prev = next;
    };
    for (const Rational& t : cs) flush(segs[i].a + r * t);
    flush(segs[i].b);
  }

  ArrangementResult res;
  res.vertices = std::move(vertices);
  for (auto& [k, info] : pieces) {
    ArrangementResult::OutEdge e;
    e.from = k.first;
    e.to = k.second;
    e.kind = info.kind;
    e.tags.assign(info.tags.begin(), info.tags.end());
    res.edges.push_back(std::move(e));
  }

  if (!dissolve_collinear_joints) return res;

  // Remove degree-2 vertices whose two incident edges are collinear and of the
  // same kind. These are artifacts of emitting geometry cell by cell; a
  // straight crease through such a joint is kinematically one crease. Single
  // incremental pass: merging at a joint never creates a new joint elsewhere.
  {
    std::vector<std::vector<int>> inc(res.vertices.size());
    for (size_t e = 0; e < res.edges.size(); ++e) {
      inc[res.edges[e].from].push_back(static_cast<int>(e));
      inc[res.edges[e].to].push_back(static_cast<int>(e));
    }
    std::vector<bool> edge_dead(res.edges.size(), false);
    std::vector<bool> vert_dead(res.vertices.size(), false);
    auto other = [&](int e, int v) {
      return res.edges[e].from == v ? res.edges[e].to : res.edges[e].from;
    };
    for (size_t v = 0; v < res.vertices.size(); ++v) {
      if (inc[v].size() != 2) continue;
      int e1 = inc[v][0], e2 = inc[v][1];
      if (edge_dead[e1] || edge_dead[e2]) continue;
      if (res.edges[e1].kind != res.edges[e2].kind) continue;
      int a = other(e1, static_cast<int>(v));
      int b = other(e2, static_cast<int>(v));
      if (a == b) continue;
      Vec2R da = res.vertices[a] - res.vertices[v];
      Vec2R db = res.vertices[b] - res.vertices[v];
      if (!opposite_direction(da, db)) continue;
      // extend e1 to (a, b), retire e2 and the joint vertex
      std::set<int> tags(res.edges[e1].tags.begin(), res.edges[e1].tags.end());
      tags.insert(res.edges[e2].tags.begin(), res.edges[e2].tags.end());
      res.edges[e1].from = a;
      res.edges[e1].to = b;
      res.edges[e1].tags.assign(tags.begin(), tags.end());
      edge_dead[e2] = true;
      vert_dead[v] = true;
      // b's incidence: replace e2 by e1
      for (int& ie : inc[b])
        if (ie == e2) ie = e1;
      inc[v].clear();
    }
    // compact
    std::vector<Vec2R> vkept;
    std::vector<int> remap(res.vertices.size(), -1);
    for (size_t v = 0; v < res.vertices.size(); ++v) {
      if (vert_dead[v]) continue;
      remap[v] = static_cast<int>(vkept.size());
      vkept.push_back(res.vertices[v]);
    }
    std::vector<ArrangementResult::OutEdge> ekept;
    for (size_t e = 0; e < res.edges.size(); ++e) {
      if (edge_dead[e]) continue;
      auto oe = res.edges[e];
      oe.from = remap[oe.from];
      oe.to = remap[oe.to];
      ekept.push_back(std::move(oe));
    }
    res.vertices = std::move(vkept);
    res.edges = std::move(ekept);
  }
  return res;
}

CreasePattern pattern_from_segments(const std::vector<ArrSegment>& segs, bool dissolve_collinear_joints,
                                    nlohmann::json meta, std::vector<std::vector<int>>* edge_tags) {
  ArrangementResult arr = build_arrangement(segs, dissolve_collinear_joints);
  // derive the border cycle
  std::map<int, std::vector<int>> border_adj;
  for (const auto& e : arr.edges) {
    if (e.kind != EdgeKind::Border) continue;
    border_adj[e.from].push_back(e.to);
    border_adj[e.to].push_back(e.from);
  }
  if (border_adj.empty()) fail(ErrorKind::Validate, "no border segments");
  for (auto& [v, nb] : border_adj)
    if (nb.size() != 2) fail(ErrorKind::Validate, "border segments do not form a simple cycle");
  std::vector<int> boundary;
  int start = border_adj.begin()->first;
  int prev = -1, cur = start;
  do {
    boundary.push_back(cur);
    const auto& nb = border_adj[cur];
    int nxt = (nb[0] != prev) ? nb[0] : nb[1];
    prev = cur;
    cur = nxt;
  } while (cur != start && boundary.size() <= border_adj.size());
  if (cur != start || boundary.size() != border_adj.size())
    fail(ErrorKind::Validate, "border segments split into several cycles");

  std::vector<Edge> edges;
  edges.reserve(arr.edges.size());
  for (const auto& e : arr.edges) edges.push_back({e.from, e.to, e.kind});
  if (edge_tags) {
    edge_tags->clear();
    for (const auto& e : arr.edges) edge_tags->push_back(e.tags);
  }
  return CreasePattern::build(std::move(arr.vertices), std::move(edges), std::move(boundary), std::move(meta));
}

}  // namespace rigami

#include "rigami/solver.hpp"

#include <algorithm>
#include <functional>

namespace rigami {

namespace {

// --------------------------------------------------------------------------
// refinement wrapper: retry at doubled precision while comparisons come back
// undecидable, up to the cap
// --------------------------------------------------------------------------
template <typename F>
auto with_refinement(const SolverOptions& opts, F fn) {
  mpfr_prec_t prec = opts.precision_bits;
  while (true) {
    Scalar::PrecisionGuard guard(prec);
    try {
      return fn();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Precision || prec >= opts.precision_cap) throw;
      prec = std::min<mpfr_prec_t>(prec * 2, opts.precision_cap);
    }
  }
}

bool require_decided(const std::optional<bool>& v, const char* what) {
  if (!v) fail(ErrorKind::Precision, std::string("undecidable at current precision: ") + what);
  return *v;
}

// --------------------------------------------------------------------------
// subgraph faces
// --------------------------------------------------------------------------
struct ACorner {
  int vertex;
  int in_edge;
  int out_edge;
};
struct AFace {
  std::vector<ACorner> corners;
};

// bounded faces of the active subgraph whose corners are all interior
std::vector<AFace> subgraph_faces(const CreasePattern& p, const std::set<int>& active) {
  std::vector<AFace> out;
  if (active.empty()) return out;
  // active incident lists in ccw order
  std::map<int, std::vector<int>> inc;
  for (int e : active) {
    inc[p.edges()[e].from];
    inc[p.edges()[e].to];
  }
  for (auto& [v, list] : inc) {
    for (int e : p.incident_ccw(v))
      if (active.count(e)) list.push_back(e);
  }
  auto dir_tail = [&](int de) { return (de & 1) ? p.edges()[de >> 1].to : p.edges()[de >> 1].from; };
  auto dir_head = [&](int de) { return (de & 1) ? p.edges()[de >> 1].from : p.edges()[de >> 1].to; };
  std::set<int> used;
  for (int e0 : active) {
    for (int d0 : {2 * e0, 2 * e0 + 1}) {
      if (used.count(d0)) continue;
      std::vector<int> cycle;
      int de = d0;
      bool degenerate = false;
      do {
        used.insert(de);
        cycle.push_back(de);
        int v = dir_head(de);
        const auto& list = inc[v];
        // position of the reverse edge in the active ccw order at v
        int e = de >> 1;
        int idx = -1;
        for (size_t i = 0; i < list.size(); ++i)
          if (list[i] == e) idx = static_cast<int>(i);
        if (idx < 0 || list.empty()) {
          degenerate = true;
          break;
        }
        int n = static_cast<int>(list.size());
        int next_e = list[(idx - 1 + n) % n];
        de = (p.edges()[next_e].from == v) ? 2 * next_e : 2 * next_e + 1;
      } while (de != d0);
      if (degenerate) continue;
      // signed area
      Rational area2(0);
      bool all_interior = true;
      for (int d : cycle) {
        const Vec2R& a = p.vertices()[dir_tail(d)];
        const Vec2R& b = p.vertices()[dir_head(d)];
        area2 += cross(a, b);
        if (!p.is_interior_vertex(dir_tail(d))) all_interior = false;
      }
      if (area2.sign() <= 0 || !all_interior) continue;
      AFace f;
      for (size_t i = 0; i < cycle.size(); ++i) {
        int d_in = cycle[i];
        int d_out = cycle[(i + 1) % cycle.size()];
        f.corners.push_back({dir_head(d_in), d_in >> 1, d_out >> 1});
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// per-corner speed coefficients
// --------------------------------------------------------------------------
struct VertexKinCache {
  std::map<int, VertexKinematics> kin;  // Mode4 vertices
  const VertexKinematics& get(const CreasePattern& p, int v, const VertexBehavior& b) {
    auto it = kin.find(v);
    if (it != kin.end()) return it->second;
    std::array<Vec2R, 4> dirs;
    for (int i = 0; i < 4; ++i) dirs[i] = p.edge_dir_from(b.creases[i], v);
    return kin.emplace(v, compute_kinematics(dirs)).first->second;
  }
};

int subset_index(const VertexBehavior& b, int crease) {
  for (size_t i = 0; i < b.creases.size(); ++i)
    if (b.creases[i] == crease) return static_cast<int>(i);
  fail(ErrorKind::Internal, "crease not in behavior subset");
}

// t_out / t_in at a corner; out-of-band failure when the walk is inconsistent
Scalar corner_coefficient(const CreasePattern& p, const VertexBehavior& b, int v, int in_edge,
                          int out_edge, VertexKinCache& cache) {
  if (b.kind == VertexBehavior::Kind::PassThrough) {
    return Scalar(Rational(1));
  }
  if (b.kind != VertexBehavior::Kind::Mode4)
    fail(ErrorKind::Internal, "face corner at inactive vertex");
  const VertexKinematics& kin = cache.get(p, v, b);
  int i = subset_index(b, in_edge), o = subset_index(b, out_edge);
  if ((o - i + 4) % 4 != 1 && (i - o + 4) % 4 != 1)
    fail(ErrorKind::Internal, "face corner creases not adjacent in subset");
  SpeedRatio r = speed_coefficient(kin, b.mode, i, o);
  if (r.suppressed) fail(ErrorKind::Internal, "suppressed coefficient on active corner");
  return r.value;
}

bool face_product_within(const CreasePattern& p, const AFace& f,
                         const std::map<int, VertexBehavior>& behaviors, const Rational& epsilon,
                         VertexKinCache& cache, SolveStats* stats) {
  Scalar prod = Scalar(Rational(1));
  for (const auto& c : f.corners) {
    auto it = behaviors.find(c.vertex);
    if (it == behaviors.end()) fail(ErrorKind::Internal, "missing behavior on face corner");
    prod = prod * corner_coefficient(p, it->second, c.vertex, c.in_edge, c.out_edge, cache);
  }
  if (stats) ++stats->faces_checked;
  return require_decided(prod.in_closed(Rational(1) - epsilon, Rational(1) + epsilon),
                         "face closure product vs [1-eps, 1+eps]");
}

// derive behaviors from an active set plus a mode map; returns false + reason
// if some vertex has no admissible behavior for its active incident set
bool derive_behaviors(const CreasePattern& p, const std::set<int>& active,
                      const std::map<int, VertexMode>& modes,
                      std::map<int, VertexBehavior>& out, std::string* reason) {
  auto bad = [&](int v, const std::string& why) {
    if (reason) *reason = "vertex " + std::to_string(v) + ": " + why;
    return false;
  };
  std::set<int> touched;
  for (int e : active) {
    touched.insert(p.edges()[e].from);
    touched.insert(p.edges()[e].to);
  }
  for (int v : touched) {
    if (!p.is_interior_vertex(v)) continue;
    std::vector<int> act;
    for (int e : p.incident_ccw(v))
      if (active.count(e)) act.push_back(e);
    if (act.empty()) continue;
    VertexBehavior b;
    if (act.size() == 2) {
      Vec2R d0 = p.edge_dir_from(act[0], v);
      Vec2R d1 = p.edge_dir_from(act[1], v);
      if (!opposite_direction(d0, d1)) return bad(v, "two active creases are not collinear");
      b.kind = VertexBehavior::Kind::PassThrough;
      b.creases = act;
      if (modes.count(v)) return bad(v, "mode recorded for a pass-through vertex");
    } else if (act.size() == 4) {
      // canonical rotation: smallest crease id first (act is ccw already)
      auto it = std::min_element(act.begin(), act.end());
      std::rotate(act.begin(), it, act.end());
      std::array<Vec2R, 4> dirs;
      for (int i = 0; i < 4; ++i) dirs[i] = p.edge_dir_from(act[i], v);
      if (!kawasaki_check_degree4(dirs)) return bad(v, "active 4-subset is not flat foldable");
      auto mit = modes.find(v);
      if (mit == modes.end()) return bad(v, "no mode recorded for a 4-active vertex");
      b.kind = VertexBehavior::Kind::Mode4;
      b.creases = act;
      b.mode = mit->second;
      if (mode_degenerate(compute_kinematics(dirs), b.mode))
        return bad(v, "recorded mode is degenerate (p = 0) but all four creases are active");
    } else {
      return bad(v, std::to_string(act.size()) + " active creases admit no local behavior");
    }
    out.emplace(v, std::move(b));
  }
  // no stray mode entries
  for (const auto& [v, m] : modes) {
    (void)m;
    auto it = out.find(v);
    if (it == out.end() || it->second.kind != VertexBehavior::Kind::Mode4) {
      if (reason) *reason = "mode recorded for vertex " + std::to_string(v) + " which does not fold four creases";
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<VertexBehavior> admissible_local_subsets(const CreasePattern& p, int v) {
  if (!p.is_interior_vertex(v)) fail(ErrorKind::Validate, "admissible_local_subsets needs an interior vertex");
  std::vector<VertexBehavior> out;
  out.push_back(VertexBehavior{});  // inactive
  const auto& inc = p.incident_ccw(v);
  int n = static_cast<int>(inc.size());
  // collinear pairs
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (opposite_direction(p.edge_dir_from(inc[i], v), p.edge_dir_from(inc[j], v))) {
        VertexBehavior b;
        b.kind = VertexBehavior::Kind::PassThrough;
        b.creases = {inc[i], inc[j]};
        std::sort(b.creases.begin(), b.creases.end());
        out.push_back(std::move(b));
      }
    }
  // flat-foldable 4-subsets (subsequences of the ccw order are ccw)
  for (int a = 0; a < n; ++a)
    for (int b2 = a + 1; b2 < n; ++b2)
      for (int c = b2 + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<int> sub = {inc[a], inc[b2], inc[c], inc[d]};
          auto it = std::min_element(sub.begin(), sub.end());
          std::rotate(sub.begin(), it, sub.end());
          std::array<Vec2R, 4> dirs;
          for (int i = 0; i < 4; ++i) dirs[i] = p.edge_dir_from(sub[i], v);
          if (!kawasaki_check_degree4(dirs)) continue;
          VertexKinematics kin = compute_kinematics(dirs);
          for (VertexMode m : {VertexMode::A, VertexMode::B}) {
            VertexBehavior b;
            b.kind = VertexBehavior::Kind::Mode4;
            b.creases = sub;
            b.mode = m;
            b.degenerate = mode_degenerate(kin, m);
            out.push_back(std::move(b));
          }
        }
  return out;
}

bool closure_holds(const CreasePattern& p, const std::map<int, VertexBehavior>& behaviors,
                   const std::set<int>& active, const Rational& epsilon, const SolverOptions& opts) {
  return with_refinement(opts, [&]() {
    VertexKinCache cache;
    auto faces = subgraph_faces(p, active);
    for (const auto& f : faces)
      if (!face_product_within(p, f, behaviors, epsilon, cache, nullptr)) return false;
    return true;
  });
}

bool check_closure(const CreasePattern& p, const ModeCertificate& cert, const Rational& epsilon,
                   const SolverOptions& opts) {
  std::map<int, VertexBehavior> behaviors;
  std::string reason;
  if (!derive_behaviors(p, cert.active, cert.modes, behaviors, &reason))
    fail(ErrorKind::Validate, "certificate is structurally invalid: " + reason);
  return closure_holds(p, behaviors, cert.active, epsilon, opts);
}

std::map<int, Scalar> propagate_speeds(const CreasePattern& p,
                                        const std::map<int, VertexBehavior>& behaviors,
                                        const std::set<int>& active) {
  // relation adjacency: crease -> (neighbor crease, ratio t_nb / t_self)
  std::map<int, std::vector<std::pair<int, Scalar>>> adj;
  VertexKinCache cache;
  for (const auto& [v, b] : behaviors) {
    if (b.kind == VertexBehavior::Kind::PassThrough) {
      adj[b.creases[0]].push_back({b.creases[1], Scalar(Rational(1))});
      adj[b.creases[1]].push_back({b.creases[0], Scalar(Rational(1))});
    } else if (b.kind == VertexBehavior::Kind::Mode4) {
      const VertexKinematics& kin = cache.get(p, v, b);
      auto shape = mode_shape(kin, b.mode);
      for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        Scalar ratio = shape[j] / shape[i];
        adj[b.creases[i]].push_back({b.creases[j], ratio});
        adj[b.creases[j]].push_back({b.creases[i], shape[i] / shape[j]});
      }
    }
  }
  std::map<int, Scalar> speed;
  for (int seed : active) {
    if (speed.count(seed)) continue;
    speed[seed] = Scalar(Rational(1));
    std::vector<int> stack{seed};
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      auto it = adj.find(c);
      if (it == adj.end()) continue;
      for (const auto& [nb, ratio] : it->second) {
        if (speed.count(nb)) continue;
        speed[nb] = speed[c] * ratio;
        stack.push_back(nb);
      }
    }
  }
  return speed;
}

// --------------------------------------------------------------------------
// mode search on a fixed active subset
// --------------------------------------------------------------------------
Verdict solve_modes_on_subset(const CreasePattern& p, const std::set<int>& active,
                              const Rational& epsilon, const SolverOptions& opts) {
  return with_refinement(opts, [&]() -> Verdict {
    Verdict verdict;
    // classify vertices into pass-throughs and mode vertices
    std::map<int, VertexBehavior> fixed;  // pass-throughs
    struct ModeVertex {
      int v;
      std::vector<int> sub;
      std::vector<VertexMode> candidates;
    };
    std::vector<ModeVertex> mode_vertices;
    {
      std::set<int> touched;
      for (int e : active) {
        touched.insert(p.edges()[e].from);
        touched.insert(p.edges()[e].to);
      }
      for (int v : touched) {
        if (!p.is_interior_vertex(v)) continue;
        std::vector<int> act;
        for (int e : p.incident_ccw(v))
          if (active.count(e)) act.push_back(e);
        if (act.empty()) continue;
        if (act.size() == 2) {
          if (!opposite_direction(p.edge_dir_from(act[0], v), p.edge_dir_from(act[1], v)))
            fail(ErrorKind::Validate,
                 "subset infeasible: two non-collinear active creases at vertex " + std::to_string(v));
          VertexBehavior b;
          b.kind = VertexBehavior::Kind::PassThrough;
          b.creases = act;
          fixed.emplace(v, std::move(b));
        } else if (act.size() == 4) {
          auto it = std::min_element(act.begin(), act.end());
          std::rotate(act.begin(), it, act.end());
          std::array<Vec2R, 4> dirs;
          for (int i = 0; i < 4; ++i) dirs[i] = p.edge_dir_from(act[i], v);
          if (!kawasaki_check_degree4(dirs))
            fail(ErrorKind::Validate,
                 "subset infeasible: active star is not flat foldable at vertex " + std::to_string(v));
          VertexKinematics kin = compute_kinematics(dirs);
          ModeVertex mv;
          mv.v = v;
          mv.sub = act;
          for (VertexMode m : {VertexMode::A, VertexMode::B})
            if (!mode_degenerate(kin, m)) mv.candidates.push_back(m);
          if (mv.candidates.empty()) return verdict;  // no (some vertex cannot move all 4 creases)
          mode_vertices.push_back(std::move(mv));
        } else {
          fail(ErrorKind::Validate, "subset infeasible: vertex " + std::to_string(v) + " has " +
                                        std::to_string(act.size()) + " active creases");
        }
      }
    }
    std::sort(mode_vertices.begin(), mode_vertices.end(),
              [](const ModeVertex& a, const ModeVertex& b) { return a.v < b.v; });

    auto faces = subgraph_faces(p, active);
    // face -> index of the last mode vertex among its corners (or -1)
    std::map<int, int> mode_pos;
    for (size_t i = 0; i < mode_vertices.size(); ++i) mode_pos[mode_vertices[i].v] = static_cast<int>(i);
    std::vector<std::vector<int>> faces_after(mode_vertices.size() + 1);  // [k] = faces checkable once k modes set
    for (size_t fi = 0; fi < faces.size(); ++fi) {
      int last = -1;
      for (const auto& c : faces[fi].corners) {
        auto it = mode_pos.find(c.vertex);
        if (it != mode_pos.end()) last = std::max(last, it->second);
      }
      faces_after[last + 1].push_back(static_cast<int>(fi));
    }

    VertexKinCache cache;
    std::map<int, VertexBehavior> behaviors = fixed;
    // faces with no mode corners must already close
    for (int fi : faces_after[0]) {
      if (!face_product_within(p, faces[fi], behaviors, epsilon, cache, &verdict.stats)) return verdict;
    }

    std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
      if (k == mode_vertices.size()) return true;
      const ModeVertex& mv = mode_vertices[k];
      for (VertexMode m : mv.candidates) {
        if (++verdict.stats.nodes > opts.budget)
          fail(ErrorKind::Budget, "mode search budget exceeded (" + std::to_string(opts.budget) + ")");
        VertexBehavior b;
        b.kind = VertexBehavior::Kind::Mode4;
        b.creases = mv.sub;
        b.mode = m;
        behaviors[mv.v] = b;
        bool ok = true;
        for (int fi : faces_after[k + 1]) {
          if (!face_product_within(p, faces[fi], behaviors, epsilon, cache, &verdict.stats)) {
            ok = false;
            break;
          }
        }
        if (ok && dfs(k + 1)) return true;
        behaviors.erase(mv.v);
      }
      return false;
    };

    if (!dfs(0)) return verdict;  // no

    verdict.yes = true;
    ModeCertificate cert;
    cert.active = active;
    for (const auto& mv : mode_vertices) cert.modes[mv.v] = behaviors[mv.v].mode;
    cert.epsilon = epsilon;
    auto speeds = propagate_speeds(p, behaviors, active);
    cert.speeds_exact = true;
    for (auto& [e, s] : speeds)
      if (!s.is_exact()) cert.speeds_exact = false;
    cert.speeds = std::move(speeds);
    verdict.certificate = std::move(cert);
    return verdict;
  });
}

Verdict decide_all_creases(const CreasePattern& p, const Rational& epsilon, const SolverOptions& opts) {
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (!p.is_interior_vertex(v)) continue;
    auto c = classify_vertex(p, v);
    if (c.kind != VertexKind::Degree4FlatFoldable && c.kind != VertexKind::CollinearPair)
      fail(ErrorKind::Validate,
           "decide_all_creases: interior vertex " + std::to_string(v) + " classifies as '" +
               vertex_kind_name(c.kind) + "' (need degree4-flat-foldable or collinear-pair)");
  }
  std::set<int> all;
  for (int e : p.crease_ids()) all.insert(e);
  if (all.empty()) fail(ErrorKind::Validate, "pattern has no creases");
  return solve_modes_on_subset(p, all, epsilon, opts);
}

// --------------------------------------------------------------------------
// optional-crease search: GAC over vertex behaviors
// --------------------------------------------------------------------------
namespace {

struct OptSearch {
  const CreasePattern& p;
  const Rational& epsilon;
  const SolverOptions& opts;
  SolveStats stats;

  std::vector<int> vertex_ids;                       // interior vertices with behaviors
  std::map<int, int> vertex_slot;                    // vertex id -> slot
  std::vector<std::vector<VertexBehavior>> domains;  // master copy
  std::vector<int> chosen;                           // slot -> behavior index or -1
  std::map<int, int8_t> crease_state;                // crease -> -1 unknown / 0 inactive / 1 active
  std::vector<int> free_creases;                     // both endpoints non-interior

  // full-pattern interior faces for early pruning
  struct PFace {
    std::vector<ACorner> corners;
  };
  std::vector<PFace> pfaces;
  std::vector<std::vector<int>> vertex_faces;  // slot -> face indices
  VertexKinCache cache;

  explicit OptSearch(const CreasePattern& pp, const Rational& eps, const SolverOptions& oo)
      : p(pp), epsilon(eps), opts(oo) {}

  bool behavior_compatible(int slot, const VertexBehavior& b) {
    int v = vertex_ids[slot];
    for (int e : p.incident_ccw(v)) {
      bool b_active = std::find(b.creases.begin(), b.creases.end(), e) != b.creases.end();
      auto it = crease_state.find(e);
      int8_t st = (it == crease_state.end()) ? int8_t(-1) : it->second;
      if (st == 0 && b_active) return false;
      if (st == 1 && !b_active) return false;
    }
    return true;
  }

  // live behavior indices for a slot under the current crease states
  std::vector<int> live(int slot) {
    std::vector<int> out;
    for (size_t i = 0; i < domains[slot].size(); ++i)
      if (behavior_compatible(slot, domains[slot][i])) out.push_back(static_cast<int>(i));
    return out;
  }

  // set a crease state; returns false on conflict; records the trail
  bool set_state(int e, int8_t val, std::vector<int>& trail) {
    auto it = crease_state.find(e);
    if (it != crease_state.end() && it->second != -1) return it->second == val;
    crease_state[e] = val;
    trail.push_back(e);
    return true;
  }

  // propagate: for every undecided vertex touching a newly fixed crease,
  // filter; force creases agreed by all live behaviors
  bool propagate(std::vector<int>& dirty, std::vector<int>& trail) {
    while (!dirty.empty()) {
      int e = dirty.back();
      dirty.pop_back();
      for (int v : {p.edges()[e].from, p.edges()[e].to}) {
        auto vs = vertex_slot.find(v);
        if (vs == vertex_slot.end()) continue;
        int slot = vs->second;
        if (chosen[slot] >= 0) {
          // already assigned: just check compatibility
          if (!behavior_compatible(slot, domains[slot][chosen[slot]])) return false;
          continue;
        }
        auto lv = live(slot);
        if (lv.empty()) return false;
        // unanimous creases
        for (int ee : p.incident_ccw(vertex_ids[slot])) {
          auto st = crease_state.find(ee);
          if (st != crease_state.end() && st->second != -1) continue;
          bool all_active = true, all_inactive = true;
          for (int bi : lv) {
            const auto& b = domains[slot][bi];
            bool a = std::find(b.creases.begin(), b.creases.end(), ee) != b.creases.end();
            all_active &= a;
            all_inactive &= !a;
          }
          if (all_active) {
            if (!set_state(ee, 1, trail)) return false;
            dirty.push_back(ee);
          } else if (all_inactive) {
            if (!set_state(ee, 0, trail)) return false;
            dirty.push_back(ee);
          }
        }
      }
    }
    // at_least_one groups: prune when a group is entirely inactive
    for (const auto& grp : opts.at_least_one) {
      bool possible = false;
      for (int e : grp) {
        auto it = crease_state.find(e);
        if (it == crease_state.end() || it->second != 0) {
          possible = true;
          break;
        }
      }
      if (!possible) return false;
    }
    return true;
  }

  // early check of full-pattern faces that are fully decided and fully active
  bool faces_ok_after(int slot, std::vector<int>& /*trail*/) {
    for (int fi : vertex_faces[slot]) {
      const auto& f = pfaces[fi];
      bool decided = true, all_active = true;
      for (const auto& c : f.corners) {
        auto vs = vertex_slot.find(c.vertex);
        if (vs == vertex_slot.end() || chosen[vs->second] < 0) {
          decided = false;
          break;
        }
        const auto& b = domains[vs->second][chosen[vs->second]];
        bool in_act = std::find(b.creases.begin(), b.creases.end(), c.in_edge) != b.creases.end();
        bool out_act = std::find(b.creases.begin(), b.creases.end(), c.out_edge) != b.creases.end();
        if (!in_act || !out_act) {
          all_active = false;
          break;
        }
      }
      if (!decided || !all_active) continue;
      // evaluate the product
      Scalar prod = Scalar(Rational(1));
      bool ok = true;
      for (const auto& c : f.corners) {
        const auto& b = domains[vertex_slot[c.vertex]][chosen[vertex_slot[c.vertex]]];
        prod = prod * corner_coefficient(p, b, c.vertex, c.in_edge, c.out_edge, cache);
      }
      ++stats.faces_checked;
      ok = require_decided(prod.in_closed(Rational(1) - epsilon, Rational(1) + epsilon),
                           "face closure product vs [1-eps, 1+eps]");
      if (!ok) return false;
    }
    return true;
  }

  std::optional<ModeCertificate> found;

  bool leaf() {
    // assemble the active set
    std::set<int> active;
    std::map<int, VertexBehavior> behaviors;
    for (size_t s = 0; s < vertex_ids.size(); ++s) {
      const auto& b = domains[s][chosen[s]];
      if (b.kind == VertexBehavior::Kind::Inactive) continue;
      behaviors[vertex_ids[s]] = b;
      for (int e : b.creases) active.insert(e);
    }
    // free creases: activate those forced, default the rest to inactive, but
    // use them to satisfy nonemptiness and at-least-one groups
    std::set<int> free_on;
    for (int e : free_creases) {
      auto it = crease_state.find(e);
      if (it != crease_state.end() && it->second == 1) free_on.insert(e);
    }
    for (const auto& grp : opts.at_least_one) {
      bool sat = false;
      for (int e : grp)
        if (active.count(e) || free_on.count(e)) sat = true;
      if (!sat) {
        int pick = -1;
        for (int e : grp) {
          auto it = crease_state.find(e);
          int8_t st = (it == crease_state.end()) ? int8_t(-1) : it->second;
          if (st != 0 && std::find(free_creases.begin(), free_creases.end(), e) != free_creases.end()) {
            pick = e;
            break;
          }
        }
        if (pick < 0) return false;
        free_on.insert(pick);
      }
    }
    if (active.empty() && free_on.empty()) {
      // nonempty subset needed; activate a free crease if allowed
      int pick = -1;
      for (int e : free_creases) {
        auto it = crease_state.find(e);
        int8_t st = (it == crease_state.end()) ? int8_t(-1) : it->second;
        if (st != 0) {
          pick = e;
          break;
        }
      }
      if (pick < 0) return false;
      free_on.insert(pick);
    }
    for (int e : free_on) active.insert(e);

    VertexKinCache fresh;
    auto faces = subgraph_faces(p, active);
    for (const auto& f : faces) {
      ++stats.faces_checked;
      Scalar prod = Scalar(Rational(1));
      for (const auto& c : f.corners) {
        auto it = behaviors.find(c.vertex);
        if (it == behaviors.end()) fail(ErrorKind::Internal, "missing behavior at leaf");
        prod = prod * corner_coefficient(p, it->second, c.vertex, c.in_edge, c.out_edge, fresh);
      }
      if (!require_decided(prod.in_closed(Rational(1) - epsilon, Rational(1) + epsilon),
                           "face closure product vs [1-eps, 1+eps]"))
        return false;
    }

    ModeCertificate cert;
    cert.active = active;
    for (const auto& [v, b] : behaviors)
      if (b.kind == VertexBehavior::Kind::Mode4) cert.modes[v] = b.mode;
    cert.epsilon = epsilon;
    auto speeds = propagate_speeds(p, behaviors, active);
    cert.speeds_exact = true;
    for (auto& [e, s] : speeds)
      if (!s.is_exact()) cert.speeds_exact = false;
    cert.speeds = std::move(speeds);
    found = std::move(cert);
    return true;
  }

  bool dfs() {
    // fail-first: fewest live behaviors
    int best = -1;
    size_t best_count = SIZE_MAX;
    std::vector<int> best_live;
    for (size_t s = 0; s < vertex_ids.size(); ++s) {
      if (chosen[s] >= 0) continue;
      auto lv = live(static_cast<int>(s));
      if (lv.size() < best_count) {
        best = static_cast<int>(s);
        best_count = lv.size();
        best_live = std::move(lv);
      }
      if (best_count <= 1) break;
    }
    if (best < 0) return leaf();
    for (int bi : best_live) {
      if (++stats.nodes > opts.budget)
        fail(ErrorKind::Budget, "optional-crease search budget exceeded (" + std::to_string(opts.budget) + ")");
      chosen[best] = bi;
      std::vector<int> trail;
      bool ok = true;
      std::vector<int> dirty;
      for (int e : p.incident_ccw(vertex_ids[best])) {
        const auto& b = domains[best][bi];
        bool a = std::find(b.creases.begin(), b.creases.end(), e) != b.creases.end();
        if (!set_state(e, a ? 1 : 0, trail)) {
          ok = false;
          break;
        }
        dirty.push_back(e);
      }
      if (ok) ok = propagate(dirty, trail);
      if (ok) ok = faces_ok_after(best, trail);
      if (ok && dfs()) return true;
      for (int e : trail) crease_state[e] = -1;
      chosen[best] = -1;
    }
    return false;
  }
};

}  // namespace

Verdict decide_optional_creases(const CreasePattern& p, const Rational& epsilon,
                                const SolverOptions& opts) {
  return with_refinement(opts, [&]() -> Verdict {
    OptSearch search(p, epsilon, opts);
    for (int v = 0; v < p.vertex_count(); ++v) {
      if (!p.is_interior_vertex(v)) continue;
      auto doms = admissible_local_subsets(p, v);
      // drop degenerate modes: they move only two of the four creases, which
      // the pass-through behaviors already cover
      std::vector<VertexBehavior> kept;
      for (auto& b : doms)
        if (!(b.kind == VertexBehavior::Kind::Mode4 && b.degenerate)) kept.push_back(std::move(b));
      search.vertex_slot[v] = static_cast<int>(search.vertex_ids.size());
      search.vertex_ids.push_back(v);
      search.domains.push_back(std::move(kept));
    }
    search.chosen.assign(search.vertex_ids.size(), -1);
    for (int e : p.crease_ids()) {
      search.crease_state[e] = -1;
      bool f_int = p.is_interior_vertex(p.edges()[e].from);
      bool t_int = p.is_interior_vertex(p.edges()[e].to);
      if (!f_int && !t_int) search.free_creases.push_back(e);
    }
    // full-pattern interior faces for early pruning
    for (const auto& f : p.faces()) {
      if (!f.all_corners_interior) continue;
      OptSearch::PFace pf;
      for (size_t i = 0; i < f.corners.size(); ++i) {
        int in_e = f.corners[(i + f.corners.size() - 1) % f.corners.size()].edge;
        int out_e = f.corners[i].edge;
        pf.corners.push_back({f.corners[i].vertex, in_e, out_e});
      }
      search.pfaces.push_back(std::move(pf));
    }
    search.vertex_faces.assign(search.vertex_ids.size(), {});
    for (size_t fi = 0; fi < search.pfaces.size(); ++fi)
      for (const auto& c : search.pfaces[fi].corners) {
        auto it = search.vertex_slot.find(c.vertex);
        if (it != search.vertex_slot.end())
          search.vertex_faces[it->second].push_back(static_cast<int>(fi));
      }

    // constraints
    std::vector<int> trail, dirty;
    for (int e : opts.force_active) {
      if (!search.set_state(e, 1, trail))
        fail(ErrorKind::Validate, "conflicting force_active/force_inactive constraints");
      dirty.push_back(e);
    }
    for (int e : opts.force_inactive) {
      if (!search.set_state(e, 0, trail))
        fail(ErrorKind::Validate, "conflicting force_active/force_inactive constraints");
      dirty.push_back(e);
    }
    Verdict verdict;
    if (!search.propagate(dirty, trail)) {
      verdict.stats = search.stats;
      return verdict;  // no
    }
    bool yes = search.dfs();
    verdict.stats = search.stats;
    if (yes) {
      verdict.yes = true;
      verdict.certificate = std::move(search.found);
    }
    return verdict;
  });
}

}  // namespace rigami

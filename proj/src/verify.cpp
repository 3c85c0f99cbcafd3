#include "rigami/flat_fold.hpp"
#include "rigami/solver.hpp"

// Certificate verification. Kept apart from the search code on purpose: it
// re-derives everything it checks from the pattern coordinates and the
// certificate fields alone.

namespace rigami {

namespace {

bool speeds_equal(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rat() == b.rat();
  Scalar d = a - b;
  if (d.is_exact()) return d.rat().sign() == 0;
  return d.to_interval(d.precision_bits()).contains(Rational(0));
}

}  // namespace

bool verify_certificate(const CreasePattern& p, const ModeCertificate& cert, std::string* reason,
                        const SolverOptions& opts) {
  auto reject = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };

  if (cert.active.empty()) return reject("certificate activates no crease");
  for (int e : cert.active) {
    if (e < 0 || e >= p.edge_count() || !p.is_crease(e))
      return reject("active id " + std::to_string(e) + " is not a crease");
  }

  // speeds: nonzero on active, zero/absent elsewhere (when speeds are carried)
  bool have_speeds = !cert.speeds.empty();
  if (cert.speeds_exact && !have_speeds) return reject("certificate carries no speeds");
  if (have_speeds) {
    for (int e : cert.active) {
      auto it = cert.speeds.find(e);
      if (it == cert.speeds.end()) return reject("active crease " + std::to_string(e) + " has no speed");
      auto sg = it->second.sign();
      if (!sg) return reject("speed sign undecidable on crease " + std::to_string(e));
      if (*sg == 0) return reject("active crease " + std::to_string(e) + " has zero speed");
    }
    for (const auto& [e, s] : cert.speeds) {
      if (cert.active.count(e)) continue;
      auto sg = s.sign();
      if (!sg || *sg != 0)
        return reject("inactive crease " + std::to_string(e) + " carries a nonzero speed");
    }
  }

  // local admissibility of the active subsets + recorded modes
  std::map<int, VertexBehavior> behaviors;
  {
    std::set<int> touched;
    for (int e : cert.active) {
      touched.insert(p.edges()[e].from);
      touched.insert(p.edges()[e].to);
    }
    for (int v : touched) {
      if (!p.is_interior_vertex(v)) continue;
      std::vector<int> act;
      for (int e : p.incident_ccw(v))
        if (cert.active.count(e)) act.push_back(e);
      if (act.empty()) continue;
      VertexBehavior b;
      if (act.size() == 2) {
        if (!opposite_direction(p.edge_dir_from(act[0], v), p.edge_dir_from(act[1], v)))
          return reject("vertex " + std::to_string(v) + ": active pair is not collinear");
        b.kind = VertexBehavior::Kind::PassThrough;
        b.creases = act;
        if (cert.modes.count(v)) return reject("vertex " + std::to_string(v) + ": mode on a pass-through");
        // equal speeds across a pass-through line
        if (have_speeds && !speeds_equal(cert.speeds.at(act[0]), cert.speeds.at(act[1])))
          return reject("vertex " + std::to_string(v) + ": pass-through speeds differ");
      } else if (act.size() == 4) {
        auto mn = std::min_element(act.begin(), act.end());
        std::rotate(act.begin(), mn, act.end());
        std::array<Vec2R, 4> dirs;
        for (int i = 0; i < 4; ++i) dirs[i] = p.edge_dir_from(act[i], v);
        if (!kawasaki_check_degree4(dirs))
          return reject("vertex " + std::to_string(v) + ": active star is not flat foldable");
        auto mit = cert.modes.find(v);
        if (mit == cert.modes.end()) return reject("vertex " + std::to_string(v) + ": missing mode");
        b.kind = VertexBehavior::Kind::Mode4;
        b.creases = act;
        b.mode = mit->second;
        VertexKinematics kin = compute_kinematics(dirs);
        if (mode_degenerate(kin, b.mode))
          return reject("vertex " + std::to_string(v) + ": degenerate mode cannot move four creases");
      } else {
        return reject("vertex " + std::to_string(v) + ": " + std::to_string(act.size()) +
                      " active creases admit no local behavior");
      }
      behaviors.emplace(v, std::move(b));
    }
    for (const auto& [v, m] : cert.modes) {
      (void)m;
      auto it = behaviors.find(v);
      if (it == behaviors.end() || it->second.kind != VertexBehavior::Kind::Mode4)
        return reject("mode recorded at vertex " + std::to_string(v) + " which folds no 4-subset");
    }
  }

  // closure at the certificate's own tolerance
  if (!closure_holds(p, behaviors, cert.active, cert.epsilon, opts))
    return reject("closure product outside [1-eps, 1+eps] on some face");

  // speeds must equal the canonical propagation up to one factor per component
  if (have_speeds) {
    auto ref = propagate_speeds(p, behaviors, cert.active);
    // component discovery mirrors propagate_speeds: walk in ascending order
    std::map<int, Scalar> scale;  // component seed -> factor
    // recompute components
    std::map<int, std::vector<int>> adj;
    for (const auto& [v, b] : behaviors) {
      (void)v;
      if (b.kind == VertexBehavior::Kind::PassThrough) {
        adj[b.creases[0]].push_back(b.creases[1]);
        adj[b.creases[1]].push_back(b.creases[0]);
      } else {
        for (int i = 0; i < 4; ++i) {
          adj[b.creases[i]].push_back(b.creases[(i + 1) % 4]);
          adj[b.creases[(i + 1) % 4]].push_back(b.creases[i]);
        }
      }
    }
    std::set<int> seen;
    for (int seed : cert.active) {
      if (seen.count(seed)) continue;
      Scalar k = cert.speeds.at(seed);  // ref[seed] = 1
      std::vector<int> stack{seed};
      seen.insert(seed);
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        if (!speeds_equal(cert.speeds.at(c), ref.at(c) * k))
          return reject("speed on crease " + std::to_string(c) +
                        " disagrees with canonical propagation");
        auto it = adj.find(c);
        if (it == adj.end()) continue;
        for (int nb : it->second)
          if (seen.insert(nb).second) stack.push_back(nb);
      }
    }
  }

  return true;
}

}  // namespace rigami

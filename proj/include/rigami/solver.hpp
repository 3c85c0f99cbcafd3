#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rigami/certificate.hpp"
#include "rigami/flat_fold.hpp"
#include "rigami/pattern.hpp"

namespace rigami {

// One admissible way a single interior vertex can participate in a rigid
// folding: stay flat, pass a straight fold line through, or fold exactly four
// creases forming a flat-foldable star in one of its two modes.
struct VertexBehavior {
  enum class Kind { Inactive, PassThrough, Mode4 };
  Kind kind = Kind::Inactive;
  std::vector<int> creases;   // active creases; Mode4: ccw starting at lowest id
  VertexMode mode = VertexMode::A;  // Mode4 only
  bool degenerate = false;    // Mode4 whose p constant is 0 (two creases stall)
};

// All admissible local behaviors at an interior vertex: the empty subset,
// every exactly-collinear pair, and every flat-foldable 4-subset with both
// modes (degenerate modes are flagged, not dropped).
std::vector<VertexBehavior> admissible_local_subsets(const CreasePattern& p, int v);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t faces_checked = 0;
};

struct Verdict {
  bool yes = false;
  std::optional<ModeCertificate> certificate;
  SolveStats stats;
};

struct SolverOptions {
  std::uint64_t budget = 100000000;       // behavior/mode assignments tried
  mpfr_prec_t precision_bits = 128;
  mpfr_prec_t precision_cap = 4096;
  // extra constraints (used by gadget-table verification and tests)
  std::set<int> force_active;
  std::set<int> force_inactive;
  std::vector<std::set<int>> at_least_one;  // each group needs >= 1 active crease
};

// Closure condition on the subgraph of active creases: for every bounded face
// of the active subgraph whose corners are all interior vertices, the product
// of speed coefficients around it lies in [1-eps, 1+eps]. Exact rational when
// all coefficients are rational, adaptive interval refinement otherwise.
bool check_closure(const CreasePattern& p, const ModeCertificate& cert, const Rational& epsilon,
                   const SolverOptions& opts = SolverOptions{});

// Finite-precision rigid foldability using all creases. Precondition: every
// interior vertex classifies Degree4FlatFoldable or CollinearPair.
Verdict decide_all_creases(const CreasePattern& p, const Rational& epsilon,
                           const SolverOptions& opts = SolverOptions{});

// Finite-precision rigid foldability with optional creases: search over
// nonempty crease subsets assembled from admissible local behaviors.
Verdict decide_optional_creases(const CreasePattern& p, const Rational& epsilon,
                                const SolverOptions& opts = SolverOptions{});

// Mode search on a fixed active subset (every active crease folds). Used by
// decide_all_creases and by the reduction witness builders.
Verdict solve_modes_on_subset(const CreasePattern& p, const std::set<int>& active,
                              const Rational& epsilon, const SolverOptions& opts = SolverOptions{});

// Re-derives all local kinematics and checks every certificate invariant plus
// the closure condition at cert.epsilon. Independent of the search code path.
// Returns false (with a reason) on any violation.
bool verify_certificate(const CreasePattern& p, const ModeCertificate& cert,
                        std::string* reason = nullptr,
                        const SolverOptions& opts = SolverOptions{});

// Canonical spanning-forest speed propagation for a fixed behavior choice:
// seed speed 1 on the lowest active crease of each component, relations
// traversed in (vertex id, position) order.
std::map<int, Scalar> propagate_speeds(const CreasePattern& p,
                                        const std::map<int, VertexBehavior>& behaviors,
                                        const std::set<int>& active);

// Internal helper shared with the oracles: evaluates closure for explicit
// behaviors (all modes fixed). Throws ErrorKind::Precision past the cap.
bool closure_holds(const CreasePattern& p, const std::map<int, VertexBehavior>& behaviors,
                   const std::set<int>& active, const Rational& epsilon, const SolverOptions& opts);

}  // namespace rigami

#pragma once

#include <vector>

#include "rigami/pattern.hpp"

namespace rigami {

// Raw input segment for the arrangement pass. `tag` is an arbitrary caller
// label carried through subdivision (-1 = none); overlapping collinear
// segments merge and accumulate all their tags.
struct ArrSegment {
  Vec2R a, b;
  EdgeKind kind = EdgeKind::Unassigned;
  int tag = -1;
};

struct ArrangementResult {
  struct OutEdge {
    int from, to;
    EdgeKind kind;
    std::vector<int> tags;
  };
  std::vector<Vec2R> vertices;
  std::vector<OutEdge> edges;
};

// Computes the planar arrangement of the input segments exactly: splits at
// all pairwise intersections and collinear-overlap endpoints, dedupes the
// resulting pieces, and (optionally) erases artificial degree-2 collinear
// joints left over from welding per-cell geometry.
ArrangementResult build_arrangement(const std::vector<ArrSegment>& segs, bool dissolve_collinear_joints);

// Arrangement + boundary-cycle derivation + validation in one step. The
// Border segments must form one simple cycle. Tag sets per edge come back
// through `edge_tags` when non-null (indexed like the pattern's edges).
CreasePattern pattern_from_segments(const std::vector<ArrSegment>& segs, bool dissolve_collinear_joints,
                                    nlohmann::json meta = nlohmann::json::object(),
                                    std::vector<std::vector<int>>* edge_tags = nullptr);

}  // namespace rigami

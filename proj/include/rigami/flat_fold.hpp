#pragma once

#include <array>

#include "rigami/pattern.hpp"

namespace rigami {

enum class VertexKind { Degree4FlatFoldable, CollinearPair, Boundary, Other };

struct VertexClass {
  VertexKind kind = VertexKind::Other;
  // populated for Degree4FlatFoldable: alpha is the sector between the
  // canonical creases c0, c1 and beta the one between c1, c2
  Scalar alpha, beta;
};

// Exact local flat-foldability of a degree-4 star: reflect the first crease
// direction successively through the other three; the star is flat foldable
// iff the result is exactly the first direction again. Pure rational
// arithmetic, no tolerance.
bool kawasaki_check_degree4(const std::array<Vec2R, 4>& dirs_ccw);
bool kawasaki_check_degree4(const CreasePattern& p, int v);

VertexClass classify_vertex(const CreasePattern& p, int v);

const char* vertex_kind_name(VertexKind k);

}  // namespace rigami

#pragma once

#include <map>
#include <set>

#include "json.hpp"
#include "rigami/kinematics.hpp"
#include "rigami/rational.hpp"

namespace rigami {

// Polynomial-size witness of rigid foldability: which creases move, the mode
// chosen at every vertex folding four creases, and one signed tangent
// half-angle speed per crease (canonical spanning-forest propagation with
// seed speed 1 on the lowest active crease of each component).
//
// Speeds are exact rationals whenever all the involved tangent half-angles
// are; otherwise they are intervals, the JSON carries decimal approximations,
// and `speeds_exact` is false.
struct ModeCertificate {
  std::set<int> active;                 // crease ids with nonzero speed
  std::map<int, VertexMode> modes;      // vertex id -> mode, 4-active vertices only
  std::map<int, Scalar> speeds;         // crease id -> speed, zero iff inactive
  Rational epsilon;                     // tolerance the certificate claims
  bool speeds_exact = true;

  nlohmann::json to_json() const;
  static ModeCertificate from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static ModeCertificate load(const std::string& path);

  // Mountain/valley reading of the signed speeds: > 0 valley, < 0 mountain.
  // Only meaningful on active creases.
  std::map<int, char> mv_assignment() const;
};

}  // namespace rigami

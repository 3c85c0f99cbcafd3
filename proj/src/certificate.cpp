#include "rigami/certificate.hpp"

#include <fstream>

namespace rigami {

nlohmann::json ModeCertificate::to_json() const {
  nlohmann::json j;
  j["active_creases"] = std::vector<int>(active.begin(), active.end());
  auto jm = nlohmann::json::object();
  for (const auto& [v, m] : modes) jm[std::to_string(v)] = mode_name(m);
  j["vertex_modes"] = std::move(jm);
  auto js = nlohmann::json::object();
  for (const auto& [e, s] : speeds) {
    if (s.is_exact())
      js[std::to_string(e)] = s.rat().str();
    else
      js[std::to_string(e)] = "~" + std::to_string(s.to_double());
  }
  j["crease_speeds"] = std::move(js);
  j["epsilon"] = epsilon.str();
  if (!speeds_exact) j["speeds_exact"] = false;
  return j;
}

ModeCertificate ModeCertificate::from_json(const nlohmann::json& j) {
  ModeCertificate c;
  for (const auto& e : j.at("active_creases")) c.active.insert(e.get<int>());
  for (const auto& [k, v] : j.at("vertex_modes").items()) {
    std::string m = v.get<std::string>();
    if (m != "A" && m != "B") fail(ErrorKind::Parse, "vertex mode must be A or B");
    c.modes[std::stoi(k)] = (m == "A") ? VertexMode::A : VertexMode::B;
  }
  c.speeds_exact = !(j.contains("speeds_exact") && j.at("speeds_exact").is_boolean() &&
                     !j.at("speeds_exact").get<bool>());
  for (const auto& [k, v] : j.at("crease_speeds").items()) {
    std::string s = v.get<std::string>();
    if (!s.empty() && s[0] == '~') {
      // approximate speed; the verifier re-derives speeds in this case
      c.speeds_exact = false;
      continue;
    }
    c.speeds[std::stoi(k)] = Scalar(Rational::from_string(s));
  }
  c.epsilon = Rational::from_string(j.at("epsilon").get<std::string>());
  return c;
}

void ModeCertificate::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
  out << to_json().dump(2) << "\n";
}

ModeCertificate ModeCertificate::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed certificate JSON: ") + e.what());
  }
  return from_json(j);
}

std::map<int, char> ModeCertificate::mv_assignment() const {
  std::map<int, char> mv;
  for (const auto& [e, s] : speeds) {
    auto sg = s.sign();
    if (!sg || *sg == 0) continue;
    mv[e] = (*sg > 0) ? 'V' : 'M';
  }
  return mv;
}

}  // namespace rigami

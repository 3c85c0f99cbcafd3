#include "rigami/pattern_io.hpp"

#include <fstream>
#include <sstream>

namespace rigami {

CreasePattern pattern_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "pattern JSON must be an object");
  if (!j.contains("vertices") || !j.contains("edges") || !j.contains("boundary"))
    fail(ErrorKind::Parse, "pattern JSON needs 'vertices', 'edges' and 'boundary'");
  std::vector<Vec2R> vertices;
  for (const auto& row : j.at("vertices")) {
    if (!row.is_array() || row.size() != 2) fail(ErrorKind::Parse, "vertex entry must be [x, y]");
    vertices.emplace_back(Rational::from_string(row[0].get<std::string>()),
                          Rational::from_string(row[1].get<std::string>()));
  }
  std::vector<Edge> edges;
  for (const auto& row : j.at("edges")) {
    if (!row.is_array() || row.size() != 3) fail(ErrorKind::Parse, "edge entry must be [from, to, kind]");
    Edge e;
    e.from = row[0].get<int>();
    e.to = row[1].get<int>();
    std::string k = row[2].get<std::string>();
    if (k.size() != 1) fail(ErrorKind::Parse, "edge assignment must be one of M/V/U/B");
    e.kind = edge_kind_from_char(k[0]);
    edges.push_back(e);
  }
  std::vector<int> boundary;
  for (const auto& v : j.at("boundary")) boundary.push_back(v.get<int>());
  nlohmann::json meta = j.contains("meta") ? j.at("meta") : nlohmann::json::object();
  return CreasePattern::build(std::move(vertices), std::move(edges), std::move(boundary), std::move(meta));
}

nlohmann::json pattern_to_json(const CreasePattern& p) {
  nlohmann::json j;
  auto verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) verts.push_back({v.x.str(), v.y.str()});
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::json::array();
  for (const auto& e : p.edges())
    edges.push_back({e.from, e.to, std::string(1, edge_kind_char(e.kind))});
  j["edges"] = std::move(edges);
  j["boundary"] = p.boundary();
  if (!p.meta().empty()) j["meta"] = p.meta();
  return j;
}

CreasePattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, "malformed JSON in '" + path + "': " + e.what());
  }
  return pattern_from_json(j);
}

void save_pattern(const CreasePattern& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
  out << pattern_to_json(p).dump(2) << "\n";
}

std::string pattern_to_svg(const CreasePattern& p) {
  // 1 pattern unit = 100 px, y flipped so the pattern reads the usual way up
  const double S = 100.0, PAD = 20.0;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& v : p.vertices()) {
    double x = v.x.to_double(), y = v.y.to_double();
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  double w = (xmax - xmin) * S + 2 * PAD, h = (ymax - ymin) * S + 2 * PAD;
  auto px = [&](const Vec2R& v) { return PAD + (v.x.to_double() - xmin) * S; };
  auto py = [&](const Vec2R& v) { return PAD + (ymax - v.y.to_double()) * S; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (const auto& e : p.edges()) {
    const Vec2R& a = p.vertices()[e.from];
    const Vec2R& b = p.vertices()[e.to];
    const char* style = nullptr;
    switch (e.kind) {
      case EdgeKind::Mountain: style = "stroke=\"#cc0000\" stroke-width=\"2\""; break;
      case EdgeKind::Valley: style = "stroke=\"#0044cc\" stroke-width=\"2\""; break;
      case EdgeKind::Unassigned: style = "stroke=\"#888888\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\""; break;
      case EdgeKind::Border: style = "stroke=\"#000000\" stroke-width=\"3\""; break;
    }
    svg << "  <line x1=\"" << px(a) << "\" y1=\"" << py(a) << "\" x2=\"" << px(b) << "\" y2=\""
        << py(b) << "\" " << style << "/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_svg(const CreasePattern& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
  out << pattern_to_svg(p);
}

}  // namespace rigami

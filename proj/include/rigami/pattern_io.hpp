#pragma once

#include <string>

#include "rigami/pattern.hpp"

namespace rigami {

// JSON pattern schema (FOLD-inspired):
//   {
//     "vertices": [["num/den","num/den"], ...],
//     "edges":    [[from, to, "M"|"V"|"U"|"B"], ...],
//     "boundary": [vertex ids ...],
//     "meta":     { ... }                       // optional, free form
//   }
CreasePattern pattern_from_json(const nlohmann::json& j);
nlohmann::json pattern_to_json(const CreasePattern& p);

CreasePattern load_pattern(const std::string& path);
void save_pattern(const CreasePattern& p, const std::string& path);

// SVG rendering: mountains solid red, valleys solid blue, unassigned dashed
// gray, border solid black; 1 pattern unit = 100 px.
std::string pattern_to_svg(const CreasePattern& p);
void export_svg(const CreasePattern& p, const std::string& path);

}  // namespace rigami

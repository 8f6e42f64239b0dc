#pragma once
// JSON and file formats for points, pseudo-orbits and point libraries.

#include <map>
#include <string>

#include "json.hpp"
#include "limitsets/shadowing.hpp"
#include "limitsets/symbolic.hpp"

namespace limitsets {

/// Scheduled point:
///   {"side": "right"|"left", "transient": "...",
///    "schedule": [{"literal": "01"} | {"prefix": "1", "symbol": "0", "slope": 1,
///                  "offset": 0, "suffix": ""}, ...]}
/// or the shorthand {"periodic": "01", "transient": "..."}.
/// Two-sided point: {"left": <scheduled>, "center": "...", "right": <scheduled>}.
nlohmann::json point_to_json(const Point& p, const Alphabet& alphabet);
Point point_from_json(const nlohmann::json& j, const Alphabet& alphabet);

/// {"alphabet": ["0", "1"], "points": {"name": <point>, ...}}
struct PointLibrary {
  Alphabet alphabet{std::vector<std::string>{"0"}};
  std::map<std::string, Point> points;

  const Point& get(const std::string& name) const;
};

PointLibrary parse_point_library(const std::string& text);
std::string read_file(const std::string& path);

/// {"direction": "forward"|"backward"|"two-sided", "delta_exponent": j,
///  "first_index": i0, "entries": ["name", ...]} with names from the library.
PseudoOrbitSym parse_pseudo_orbit(const nlohmann::json& j, const PointLibrary& library);

}  // namespace limitsets

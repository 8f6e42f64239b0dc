#include "limitsets/io.hpp"

#include <fstream>
#include <sstream>

#include "limitsets/error.hpp"

namespace limitsets {

namespace {

using nlohmann::json;

json scheduled_to_json(const ScheduledPoint& s, const Alphabet& a) {
  json j;
  j["side"] = s.side() == Side::right ? "right" : "left";
  j["transient"] = a.format(s.transient());
  json blocks = json::array();
  for (const Block& b : s.schedule()) {
    if (!b.growing() && b.offset == 0) {
      blocks.push_back({{"literal", a.format(b.prefix) + a.format(b.suffix)}});
      continue;
    }
    blocks.push_back({{"prefix", a.format(b.prefix)},
                      {"symbol", a.name(b.symbol)},
                      {"slope", b.slope},
                      {"offset", b.offset},
                      {"suffix", a.format(b.suffix)}});
  }
  j["schedule"] = blocks;
  return j;
}

std::string text_field(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (!j.at(key).is_string()) fail(Error::Kind::parse, std::string("field '") + key + "' must be a string");
  return j.at(key).get<std::string>();
}

std::uint64_t count_field(const json& j, const char* key) {
  if (!j.contains(key)) return 0;
  if (!j.at(key).is_number_unsigned()) {
    fail(Error::Kind::parse, std::string("field '") + key + "' must be a nonnegative integer");
  }
  return j.at(key).get<std::uint64_t>();
}

ScheduledPoint scheduled_from_json(const json& j, const Alphabet& a, Side default_side) {
  if (!j.is_object()) fail(Error::Kind::parse, "point description must be an object");
  Side side = default_side;
  if (j.contains("side")) {
    std::string s = text_field(j, "side");
    if (s == "right") {
      side = Side::right;
    } else if (s == "left") {
      side = Side::left;
    } else {
      fail(Error::Kind::parse, "side must be 'right' or 'left'");
    }
  }
  Word transient = a.parse(text_field(j, "transient"));
  if (j.contains("periodic")) {
    return ScheduledPoint::periodic(a.parse(text_field(j, "periodic")), std::move(transient), side);
  }
  if (!j.contains("schedule") || !j.at("schedule").is_array()) {
    fail(Error::Kind::parse, "point needs 'schedule' or 'periodic'");
  }
  std::vector<Block> blocks;
  for (const json& b : j.at("schedule")) {
    if (!b.is_object()) fail(Error::Kind::parse, "schedule entries must be objects");
    if (b.contains("literal")) {
      blocks.push_back(Block::literal(a.parse(text_field(b, "literal"))));
      continue;
    }
    auto symbol = a.find(text_field(b, "symbol"));
    if (!symbol) fail(Error::Kind::parse, "block symbol not in the alphabet");
    blocks.push_back(Block::power(a.parse(text_field(b, "prefix")), *symbol, count_field(b, "slope"),
                                  count_field(b, "offset"), a.parse(text_field(b, "suffix"))));
  }
  return ScheduledPoint(std::move(transient), std::move(blocks), side);
}

}  // namespace

nlohmann::json point_to_json(const Point& p, const Alphabet& alphabet) {
  if (const auto* s = std::get_if<ScheduledPoint>(&p)) return scheduled_to_json(*s, alphabet);
  const auto& t = std::get<TwoSidedPoint>(p);
  return {{"left", scheduled_to_json(t.left(), alphabet)},
          {"center", alphabet.format(t.center())},
          {"right", scheduled_to_json(t.right(), alphabet)}};
}

Point point_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
  if (j.is_object() && (j.contains("left") || j.contains("right")) && !j.contains("side")) {
    if (!j.contains("left") || !j.contains("right")) {
      fail(Error::Kind::parse, "two-sided point needs both 'left' and 'right'");
    }
    return TwoSidedPoint(scheduled_from_json(j.at("left"), alphabet, Side::left),
                         alphabet.parse(text_field(j, "center")),
                         scheduled_from_json(j.at("right"), alphabet, Side::right));
  }
  return scheduled_from_json(j, alphabet, Side::right);
}

const Point& PointLibrary::get(const std::string& name) const {
  auto it = points.find(name);
  if (it == points.end()) fail(Error::Kind::parse, "unknown point '" + name + "'");
  return it->second;
}

PointLibrary parse_point_library(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Error::Kind::parse, std::string("point library is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("alphabet") || !j.at("alphabet").is_array()) {
    fail(Error::Kind::parse, "point library needs an 'alphabet' array");
  }
  std::vector<std::string> names;
  for (const json& n : j.at("alphabet")) {
    if (!n.is_string()) fail(Error::Kind::parse, "alphabet entries must be strings");
    names.push_back(n.get<std::string>());
  }
  PointLibrary lib;
  try {
    lib.alphabet = Alphabet(std::move(names));
  } catch (const Error& e) {
    fail(Error::Kind::parse, e.what());
  }
  if (j.contains("points")) {
    for (const auto& [name, desc] : j.at("points").items()) {
      try {
        lib.points.emplace(name, point_from_json(desc, lib.alphabet));
      } catch (const Error& e) {
        fail(Error::Kind::parse, "point '" + name + "': " + e.what());
      }
    }
  }
  return lib;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Error::Kind::parse, "cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

PseudoOrbitSym parse_pseudo_orbit(const nlohmann::json& j, const PointLibrary& library) {
  if (!j.is_object()) fail(Error::Kind::parse, "pseudo-orbit must be an object");
  PseudoOrbitSym po;
  std::string dir = text_field(j, "direction");
  if (dir == "forward" || dir.empty()) {
    po.direction = Direction::forward;
  } else if (dir == "backward") {
    po.direction = Direction::backward;
  } else if (dir == "two-sided") {
    po.direction = Direction::two_sided;
  } else {
    fail(Error::Kind::parse, "unknown direction '" + dir + "'");
  }
  po.delta_exponent = count_field(j, "delta_exponent");
  if (j.contains("first_index")) {
    if (!j.at("first_index").is_number_integer()) fail(Error::Kind::parse, "first_index must be an integer");
    po.first_index = j.at("first_index").get<std::int64_t>();
  }
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    fail(Error::Kind::parse, "pseudo-orbit needs an 'entries' array");
  }
  for (const json& e : j.at("entries")) {
    if (e.is_string()) {
      po.entries.push_back(library.get(e.get<std::string>()));
    } else {
      po.entries.push_back(point_from_json(e, library.alphabet));
    }
  }
  if (po.entries.empty()) fail(Error::Kind::parse, "pseudo-orbit needs at least one entry");
  if (po.direction == Direction::backward && !j.contains("first_index")) {
    po.first_index = -static_cast<std::int64_t>(po.entries.size()) + 1;
  }
  return po;
}

}  // namespace limitsets

#include "hyparr/json_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  throw ParseError("expected a rational string, got " + v.dump());
}

}  // namespace

Arrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes")) {
    throw ParseError("arrangement JSON needs \"dim\" and \"hyperplanes\"");
  }
  if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a nonnegative integer");
  const auto dim = j["dim"].get<std::size_t>();
  if (!j["hyperplanes"].is_array()) throw ParseError("\"hyperplanes\" must be an array");
  std::vector<Hyperplane> hs;
  for (const auto& h : j["hyperplanes"]) {
    if (!h.is_object() || !h.contains("normal") || !h.contains("offset") || !h["normal"].is_array()) {
      throw ParseError("each hyperplane needs a \"normal\" array and an \"offset\"");
    }
    Hyperplane raw;
    for (const auto& c : h["normal"]) raw.normal.push_back(rational_from_json(c));
    raw.offset = rational_from_json(h["offset"]);
    if (raw.normal.size() != dim) {
      throw ParseError("normal " + h["normal"].dump() + " does not have " + std::to_string(dim) + " entries");
    }
    if (is_zero(raw.normal)) throw ParseError("hyperplane with zero normal");
    hs.push_back(std::move(raw));
  }
  try {
    return Arrangement(dim, std::move(hs));
  } catch (const DuplicateHyperplane& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json arrangement_to_json(const Arrangement& a) {
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : a.hyperplanes()) {
    nlohmann::json normal = nlohmann::json::array();
    for (const auto& q : h.normal) normal.push_back(to_string(q));
    hs.push_back({{"normal", normal}, {"offset", to_string(h.offset)}});
  }
  return {{"dim", a.dim()}, {"hyperplanes", hs}};
}

Arrangement read_arrangement(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return arrangement_from_json(j);
}

Arrangement read_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_arrangement(in);
}

void write_arrangement(std::ostream& out, const Arrangement& a) { out << arrangement_to_json(a).dump() << '\n'; }

}  // namespace hyparr

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hyparr/arrangement.hpp"

namespace hyparr {

// Arrangement file format:
//   {"dim": 2, "hyperplanes": [{"normal": ["1","0"], "offset": "0"}, ...]}
// Rationals are strings "p" or "p/q"; plain JSON integers are also accepted
// on input. Output always uses canonical strings. Throws ParseError.
Arrangement arrangement_from_json(const nlohmann::json& j);
nlohmann::json arrangement_to_json(const Arrangement& a);

Arrangement read_arrangement(std::istream& in);
Arrangement read_arrangement_file(const std::string& path);
void write_arrangement(std::ostream& out, const Arrangement& a);

}  // namespace hyparr

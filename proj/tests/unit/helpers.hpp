#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/gen.hpp"

namespace testing {

inline hyparr::Vector P(const std::string& s) { return hyparr::parse_point(s); }

// Hyperplanes given as ("normal", "offset") text pairs.
inline hyparr::Arrangement arr(std::size_t dim, std::initializer_list<std::pair<const char*, const char*>> hs) {
  std::vector<hyparr::Hyperplane> out;
  for (const auto& [n, c] : hs) out.push_back({hyparr::parse_point(n), hyparr::parse_rational(c)});
  return hyparr::Arrangement(dim, std::move(out));
}

inline hyparr::Arrangement axes() { return hyparr::generate({hyparr::Kind::Boolean, 2}); }
inline hyparr::Arrangement parallel_pair() { return hyparr::generate({hyparr::Kind::ParallelPair, 2}); }
inline hyparr::Arrangement triangle() { return hyparr::generate({hyparr::Kind::Triangle, 2}); }

inline std::vector<std::int64_t> I(std::initializer_list<std::int64_t> v) { return v; }

}  // namespace testing

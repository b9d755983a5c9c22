#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/poset.hpp"

namespace hyparr {

enum class Kind { Boolean, BraidA, TypeB, TypeD, Dihedral, ParallelPair, Triangle, Random };

Kind parse_kind(const std::string& s);  // throws BadParams
const char* to_string(Kind k);

struct GeneratorSpec {
  Kind kind = Kind::Boolean;
  std::size_t dim = 2;
  std::size_t count = 0;  // lines for dihedral, hyperplanes for random
  std::uint64_t seed = 0;
  bool linear = false;    // random only: all offsets zero
};

// boolean {x_i = 0}; braid_A {x_i = x_j} in R^dim; type_B {x_i = 0,
// x_i +- x_j = 0}; type_D {x_i +- x_j = 0}; dihedral: `count` distinct
// rational lines through 0 in R^2 at roughly equal angles; parallel_pair
// {x_1 = 0, x_1 = 1}; triangle {x_1 = 0, x_2 = 0, x_1 + x_2 = 1} (dim 2);
// random: `count` distinct hyperplanes with normals in {-3..3}^dim and
// offsets in {-2..2}, drawn from mt19937_64(seed). Throws BadParams.
Arrangement generate(const GeneratorSpec& spec);

// Closed-form characteristic polynomial for boolean, braid_A, type_B,
// type_D and dihedral; `count` is the line count for dihedral. Throws
// NoClosedForm for the other kinds.
CharPoly expected_charpoly(Kind kind, std::size_t dim, std::size_t count = 0);

struct CorpusEntry {
  std::string name;
  GeneratorSpec spec;
  Arrangement arrangement;
};

// boolean d <= 4, braid_A n <= 4, type_B d <= 3, type_D 2 <= d <= 3,
// parallel_pair, triangle and 20 seeded random arrangements with d <= 3,
// m <= 6 (every fourth one linear).
std::vector<CorpusEntry> standard_corpus();

}  // namespace hyparr

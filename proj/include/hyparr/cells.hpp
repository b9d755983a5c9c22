#pragma once

#include <vector>

#include "hyparr/arrangement.hpp"
#include "hyparr/feasibility.hpp"

namespace hyparr {

// Open chamber interior witness plus its zero-free sign vector. The closed
// chamber is {z : signs[i] * (<z, y_i> - c_i) >= 0 for all i}.
struct Chamber {
  SignVector signs;
  Vector witness;
};

// A face of the arrangement: the cell with sign vector `signs`, i.e. the set
// where residuals vanish exactly on the zero set and have the given sign
// elsewhere. The same object describes the relative interior (strict) or
// the closed face (non-strict), and a j-dimensional face doubles as the
// polyhedron P for j-level sums.
struct Face {
  SignVector signs;
  std::size_t dim = 0;
  Vector witness;  // in the relative interior

  std::vector<std::size_t> zero_set() const { return signs.zero_set(); }
};

enum class ChamberKind { Bounded, UnboundedLineFree, HasLine };
const char* to_string(ChamberKind k);

Face as_face(const Chamber& c, std::size_t dim);

// Constraints describing the cell with the given signs; `closed` relaxes the
// nonzero entries to non-strict inequalities.
std::vector<LinearConstraint> cell_constraints(const Arrangement& a, const SignVector& signs, bool closed);

// Whether x lies in the closed cell (every residual is zero or has the sign
// of the cell).
bool in_closed_cell(const Arrangement& a, const SignVector& signs, std::span<const Rational> x);

// All chambers, sorted by sign vector. Throws SizeLimit.
std::vector<Chamber> enumerate_chambers(const Arrangement& a, const Limits& limits = {});

// All faces of the closed cell P (P itself included), sorted by dimension
// then sign vector.
std::vector<Face> faces_of(const Arrangement& a, const Face& polyhedron);
std::vector<Face> faces_of_chamber(const Arrangement& a, const Chamber& p);
std::vector<std::size_t> face_counts_by_dim(const std::vector<Face>& faces, std::size_t dim);

// j-dimensional faces of all chambers, deduplicated, sorted by sign vector.
std::vector<Face> enumerate_Rj(const Arrangement& a, std::size_t j, const Limits& limits = {});

ChamberKind classify_chamber(const Arrangement& a, const Chamber& p);
// Bounded modulo the lineality space of the arrangement (the recession cone
// meets the span of the normals only in 0). Equals boundedness at full rank.
bool is_relatively_bounded(const Arrangement& a, const Chamber& p);

}  // namespace hyparr

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

// Dense row-major rational matrix; each entry of the outer vector is a row.
using Matrix = std::vector<Vector>;

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Vector add(std::span<const Rational> a, std::span<const Rational> b);
Vector sub(std::span<const Rational> a, std::span<const Rational> b);
Vector scale(const Rational& s, std::span<const Rational> a);
bool is_zero(std::span<const Rational> v);

// y = M x, with M given by rows.
Vector apply(const Matrix& m, std::span<const Rational> x);
Matrix transpose(const Matrix& m, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b, std::size_t b_cols);

struct ReducedRowEchelon {
  Matrix rows;                      // nonzero rows only, pivots normalized to 1
  std::vector<std::size_t> pivots;  // pivot column of each row
};

ReducedRowEchelon rref(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

// Basis (as rows) of {v : m v = 0}.
Matrix nullspace(const Matrix& m, std::size_t cols);

// Some solution of m v = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b, std::size_t cols);

// Indices of a maximal linearly independent subset of rows, chosen greedily
// in order.
std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols);

// Inverse of a nonsingular square matrix. Throws Inconsistent if singular.
Matrix inverse(const Matrix& m);

// Pairwise orthogonal basis of span(rows), unnormalized so it stays rational.
// Dependent rows are dropped.
Matrix orthogonal_basis(const Matrix& rows, std::size_t cols);

// Membership test for an affine subspace point + span(directions), backed by
// a precomputed annihilator: v is inside iff every annihilator row is
// orthogonal to v - point.
class AffineSubspace {
 public:
  AffineSubspace() = default;
  AffineSubspace(Vector point, const Matrix& directions);

  bool contains(std::span<const Rational> v) const;
  std::size_t dim() const { return point_.size() - annihilator_.size(); }
  const Vector& point() const { return point_; }

 private:
  Vector point_;
  Matrix annihilator_;
};

}  // namespace hyparr

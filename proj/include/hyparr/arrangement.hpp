#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyparr/linalg.hpp"
#include "hyparr/rational.hpp"

namespace hyparr {

// The affine hyperplane {z : <z, normal> = offset}, kept in canonical form:
// the normal is a primitive integer vector whose first nonzero entry is
// positive. Equal point sets compare equal.
struct Hyperplane {
  Vector normal;
  Rational offset;

  Rational residual(std::span<const Rational> x) const { return dot(normal, x) - offset; }
  bool is_linear() const { return sgn(offset) == 0; }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

// Throws ZeroNormal.
Hyperplane canonicalize(std::span<const Rational> normal, const Rational& offset);

class Arrangement {
 public:
  explicit Arrangement(std::size_t dim) : dim_(dim) {}
  // Canonicalizes each hyperplane; throws DuplicateHyperplane or DimensionMismatch.
  Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  bool is_linear() const;
  // Dimension of the span of the normals.
  std::size_t rank() const;
  Matrix normals() const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Element of {-1, 0, +1}^m. Prints as "+-0".
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> s) : signs_(std::move(s)) {}
  static SignVector parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  void set(std::size_t i, int s) { signs_[i] = static_cast<std::int8_t>(s); }
  const std::vector<std::int8_t>& values() const { return signs_; }

  bool has_zero() const;
  std::vector<std::size_t> zero_set() const;
  // Every nonzero entry of *this agrees with other (this is a face of other).
  bool conforms_to(const SignVector& other) const;
  std::string str() const;

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

// Entry i is sign(<x, y_i> - c_i). Throws DimensionMismatch.
SignVector sign_vector(const Arrangement& a, std::span<const Rational> x);

// Affine solution set of a hyperplane system: point + span(directions).
struct AffineSolution {
  Vector point;
  Matrix directions;  // linearly independent rows
  std::size_t dim() const { return directions.size(); }
};

// Intersection of the given hyperplanes of a d-dimensional arrangement, or
// nullopt when empty. The empty subset yields all of R^d.
std::optional<AffineSolution> solve_affine(const Arrangement& a, std::span<const std::size_t> subset);
std::optional<AffineSolution> solve_affine(std::size_t dim, std::span<const Hyperplane> hyperplanes);

// Refusal threshold for enumerations that are exponential in m.
struct Limits {
  std::size_t max_hyperplanes = 24;
};

void check_size(const Arrangement& a, const Limits& limits, std::string_view what);

}  // namespace hyparr

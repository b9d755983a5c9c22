#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

// A nonempty intersection of hyperplanes of an arrangement (R^d for the empty
// intersection). `containing` lists every hyperplane that contains the flat,
// so the flat equals the intersection of exactly those hyperplanes.
struct Flat {
  AffineSolution subspace;
  std::vector<std::size_t> containing;  // sorted

  std::size_t dim() const { return subspace.dim(); }
  const Vector& point() const { return subspace.point; }
  const Matrix& directions() const { return subspace.directions; }
};

// inner is a subset of outer, decided geometrically.
bool flat_contains(const Arrangement& a, const Flat& outer, const Flat& inner);

// Intersection of an affine subspace with a hyperplane; nullopt when empty.
std::optional<AffineSolution> intersect(const AffineSolution& s, const Hyperplane& h);

class IntersectionPoset {
 public:
  explicit IntersectionPoset(const Arrangement& a);

  std::size_t ambient_dim() const { return dim_; }
  // Ordered by decreasing dimension, then by containing set. flats()[0] is R^d.
  const std::vector<Flat>& flats() const { return flats_; }
  const Flat& operator[](std::size_t i) const { return flats_[i]; }
  std::size_t size() const { return flats_.size(); }
  // Indices of the flats of dimension k.
  const std::vector<std::size_t>& of_dim(std::size_t k) const { return by_dim_[k]; }
  std::optional<std::size_t> find(const std::vector<std::size_t>& containing) const;
  // Index of a flat equal (as a point set) to f; throws FlatNotInPoset.
  std::size_t locate(const Arrangement& a, const Flat& f) const;

 private:
  std::size_t dim_;
  std::vector<Flat> flats_;
  std::vector<std::vector<std::size_t>> by_dim_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

inline IntersectionPoset intersection_poset(const Arrangement& a) { return IntersectionPoset(a); }

// chi(t) = sum_k coeffs[k] t^k. The sign convention for absolute
// coefficients uses n = coeffs.size() - 1 (d for chi_A, j for level j):
// a_k = (-1)^(n-k) coeffs[k].
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  std::size_t degree_bound() const { return coeffs.size() - 1; }
  std::vector<std::int64_t> abs() const;
  std::int64_t eval(std::int64_t t) const;
  std::string str() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

// Whitney subset sum. Throws SizeLimit when m exceeds the cap.
CharPoly char_poly_whitney(const Arrangement& a, const Limits& limits = {});
// Moebius recursion over the intersection poset.
CharPoly char_poly_moebius(const Arrangement& a);
CharPoly char_poly_moebius(const IntersectionPoset& p);

struct Restriction {
  Arrangement arrangement;  // in coordinates u with z = origin + sum u_k frame[k]
  Vector origin;
  Matrix frame;  // pairwise orthogonal, unnormalized
};

// A^L re-expressed in an orthogonal frame of L; coinciding traces are merged.
// Throws FlatNotInPoset.
Restriction restriction(const Arrangement& a, const Flat& flat);
Restriction restriction(const Arrangement& a, const IntersectionPoset& p, std::size_t flat_index);

// Sum over j-dimensional flats L of chi of A^L; coefficients of degree <= j.
CharPoly char_poly_level(const Arrangement& a, std::size_t j);
CharPoly char_poly_level(const Arrangement& a, const IntersectionPoset& p, std::size_t j);

}  // namespace hyparr

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyparr/cells.hpp"

namespace hyparr {

// Polyhedral cone in R^d, in generator form (span(lineality) + pos(generators))
// and/or halfspace form ({u : <e, u> = 0 for e in equalities,
// <h, u> <= 0 for h in halfspaces}). Either form may be absent.
struct Cone {
  std::size_t ambient_dim = 0;
  bool has_generator_form = false;
  Matrix lineality;
  Matrix generators;
  bool has_halfspace_form = false;
  Matrix equalities;
  Matrix halfspaces;
};

// Polar cone {z : <z, y> <= 0 for all y in C}. Switches representation:
// generator form becomes halfspace form and vice versa.
Cone dual(const Cone& c);

// Exact membership. in_cone needs the generator form, in_halfspaces the
// halfspace form.
bool in_cone(const Cone& c, std::span<const Rational> v);
bool in_halfspaces(const Cone& c, std::span<const Rational> v);
// v is a strictly positive combination of the generators plus a lineality
// element, i.e. v lies in the relative interior of the generator form.
bool in_cone_relint(const Cone& c, std::span<const Rational> v);

// T_F(P) for a face F of the closed cell P (P is a chamber or any face).
// Halfspace form. Throws FaceNotOfChamber.
Cone tangent_cone(const Arrangement& a, const Face& p, const Face& f);
Cone tangent_cone(const Arrangement& a, const Chamber& p, const Face& f);
// N_F(P), the dual of T_F(P): span of normals P is flat in plus the positive
// hull of the outward normals of the hyperplanes F additionally lies in.
// Generator form. Throws FaceNotOfChamber.
Cone normal_cone(const Arrangement& a, const Face& p, const Face& f);
Cone normal_cone(const Arrangement& a, const Chamber& p, const Face& f);

// Generator-form cone prepared for repeated membership queries. Lineality is
// projected out and redundant generators are dropped once; when the
// remaining generators are independent, membership reduces to solving for
// the unique coefficients and checking their signs.
class ConeMembership {
 public:
  ConeMembership() = default;
  explicit ConeMembership(const Cone& c);
  bool contains(std::span<const Rational> v) const;
  bool simplicial() const { return simplicial_; }

 private:
  Vector project_out_lineality(std::span<const Rational> v) const;

  Cone cone_;
  Matrix lin_basis_;  // orthogonal
  Vector lin_sq_;
  Matrix gens_;        // irredundant, lineality projected out
  Matrix coef_map_;    // (G G^T)^{-1} G when simplicial
  bool simplicial_ = false;
};

struct ProjectionResult {
  Vector point;
  Face face;
  std::size_t k = 0;
};

// Metric projection onto one closed cell P with everything that does not
// depend on the query point precomputed. Faces are held in ascending
// dimension, then sign-vector order.
class CellProjector {
 public:
  CellProjector(const Arrangement& a, Face cell);
  CellProjector(const Arrangement& a, Face cell, std::vector<Face> faces_of_cell);

  const Face& cell() const { return cell_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Cone& normal_cone(std::size_t face_index) const { return prepared_[face_index].normal_cone; }

  // Unique face F with pi(x) in relint F and x - pi(x) in N_F(P).
  // Throws Inconsistent if zero or several faces accept.
  ProjectionResult project(std::span<const Rational> x) const;
  // x in F + N_F(P) (sign = +1) or F - N_F(P) (sign = -1), closed F.
  bool indicator(std::size_t face_index, std::span<const Rational> x, int sign) const;

  // One pass over all faces: the accepting face of the projection and, for
  // every k, the number of k-faces F with x in F + sign * N_F(P).
  struct Evaluation {
    std::size_t accepting_face = 0;
    Vector point;
    std::vector<int> closed_counts;
  };
  Evaluation evaluate(std::span<const Rational> x, int sign = +1) const;

 private:
  struct PreparedFace {
    Matrix rows;   // independent normals spanning aff(F)'s orthogonal complement
    Vector rhs;
    Matrix lift;   // rows^T (rows rows^T)^{-1}, d x r
    Cone normal_cone;
    ConeMembership normal;
  };

  Vector project_to_hull(const PreparedFace& pf, std::span<const Rational> x) const;
  bool sign_pattern_matches(const Face& f, std::span<const Rational> point, bool closed) const;

  const Arrangement* arr_;
  Face cell_;
  std::vector<Face> faces_;
  std::vector<PreparedFace> prepared_;
};

ProjectionResult metric_project(const Arrangement& a, const Chamber& p, std::span<const Rational> x);
bool indicator_F_plus_N(const Arrangement& a, const Chamber& p, const Face& f, std::span<const Rational> x, int sign);

// Squared Euclidean distance.
Rational distance_sq(std::span<const Rational> x, std::span<const Rational> y);

}  // namespace hyparr

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

enum class Relation { LessEqual, Less, Equal };

// <coeffs, x> (rel) rhs
struct LinearConstraint {
  Vector coeffs;
  Rational rhs;
  Relation rel = Relation::LessEqual;
};

// Decides whether the mixed strict/non-strict system over free variables
// x in R^dim has a solution and returns an exact witness satisfying every
// constraint. Equalities are eliminated first; the remaining system is solved
// by a two-phase dense simplex with Bland's rule, maximizing a common slack
// t <= 1 on the strict rows. Deterministic and exact.
std::optional<Vector> feasible(std::size_t dim, std::span<const LinearConstraint> constraints);

enum class Feasibility {
  Infeasible,    // even the closure (strict rows relaxed to <=) is empty
  OnlyRelaxed,   // the closure is nonempty but some strict row cannot hold
  Feasible,
};

struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  // Satisfies all constraints when Feasible; only the relaxed system when
  // OnlyRelaxed; empty when Infeasible.
  std::optional<Vector> witness;
};

// Same kernel as feasible(), also reporting whether the relaxed system is
// feasible. Used for monotone pruning in enumerations.
FeasibilityResult analyze_system(std::size_t dim, std::span<const LinearConstraint> constraints);

// True when x satisfies every constraint exactly.
bool satisfies(std::span<const LinearConstraint> constraints, std::span<const Rational> x);

}  // namespace hyparr

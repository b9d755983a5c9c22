#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyparr/analysis.hpp"

namespace hyparr {

// phi at a point. `counts` holds phi_k(x) = sum over chambers P and k-faces F
// of the closed indicators 1_{F + N_F(P)}(x). `per_chamber` holds dim(x, P)
// for each chamber (in the order of Analysis::chambers()), and `histogram`
// counts how many chambers give each dimension. counts and histogram agree
// off the exceptional sets; on them counts can only be larger.
struct PhiProfile {
  std::vector<std::int64_t> counts;
  std::vector<std::size_t> per_chamber;
  std::vector<std::int64_t> histogram;
};

PhiProfile phi(const Analysis& an, std::span<const Rational> x);
// Same counts through indicator_F_plus_N over freshly enumerated faces; no
// prepared data is shared with phi().
std::vector<std::int64_t> phi_slow(const Arrangement& a, std::span<const Rational> x, const Limits& limits = {});
// Level-j analogue: sums over P in R_j. Entries 0..j.
std::vector<std::int64_t> phi_level(const Analysis& an, std::size_t j, std::span<const Rational> x);

struct ExceptionalWitness {
  std::size_t flat = 0;
  std::size_t other = 0;
  bool lower = true;
};

struct ExceptionalReport {
  std::size_t k = 0;
  bool member = false;
  std::vector<ExceptionalWitness> witnesses;
};

// Membership of x in E_k. k = d reduces to the union of the hyperplanes.
// Throws BadParams if k > d.
ExceptionalReport in_exceptional(const Analysis& an, std::size_t k, std::span<const Rational> x);
// Membership in E_kj. Throws BadParams unless k <= j <= d.
ExceptionalReport in_exceptional_level(const Analysis& an, std::size_t k, std::size_t j, std::span<const Rational> x);

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
  // Throws VerificationFailure naming the first failed check.
  void require() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

Report verify_theorem_main(const Analysis& an, std::span<const Rational> x);
Report verify_theorem_j_level(const Analysis& an, std::size_t j, std::span<const Rational> x);
// Linear arrangements only (throws NotLinear). Dual-cone sum against a_0,
// plus the cover check at full rank.
Report verify_prop_k0(const Analysis& an, std::span<const Rational> x);
// Polar cone of a chamber of a linear arrangement.
Cone chamber_polar(const Arrangement& a, const Chamber& c);
// Membership of x in the union of L^perp over flats L other than {0}.
bool in_dual_exceptional(const Analysis& an, std::span<const Rational> x);
// Throws HasLine when the chamber contains a line.
Report verify_mcmullen(const Analysis& an, std::size_t chamber, std::span<const Rational> x);
std::int64_t mcmullen_sum(const CellProjector& p, std::span<const Rational> x);
Report verify_zaslavsky(const Analysis& an);

// Seeded test points: random rationals with odd denominators, with every
// third point placed on a flat (possibly pushed off it along a normal of
// one of its hyperplanes) so that exceptional sets are hit.
std::vector<Vector> test_points(const Analysis& an, std::size_t count, std::uint64_t seed);

enum class GroupType { A, B, D, I2 };
GroupType parse_group_type(const std::string& s);

// Exact matrices of the reflection group (signed permutations). `rank` is n
// for A (acting on R^n), d for B and D, and m for I2, where only m in
// {1, 2, 4} is rational. Throws BadParams.
std::vector<Matrix> reflection_group(GroupType type, std::size_t rank);
Arrangement reflection_arrangement(GroupType type, std::size_t rank);
Report verify_orbit_reflection(GroupType type, std::size_t rank, std::span<const Rational> x);

}  // namespace hyparr

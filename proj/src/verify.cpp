#include "hyparr/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "hyparr/error.hpp"
#include "hyparr/gen.hpp"

namespace hyparr {

namespace {

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void check_point(const Analysis& an, std::span<const Rational> x) {
  if (x.size() != an.dim()) throw DimensionMismatch("point has wrong dimension");
}

void collect(const std::vector<ExceptionalPiece>& pieces, std::span<const Rational> x, ExceptionalReport& r) {
  for (const auto& p : pieces) {
    if (p.space.contains(x)) r.witnesses.push_back({p.flat, p.other, p.lower});
  }
}

Matrix permutation_matrix(const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
  const std::size_t n = perm.size();
  Matrix m(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i) m[i][perm[i]] = signs[i];
  return m;
}

}  // namespace

PhiProfile phi(const Analysis& an, std::span<const Rational> x) {
  check_point(an, x);
  const std::size_t d = an.dim();
  PhiProfile pr{std::vector<std::int64_t>(d + 1, 0), {}, std::vector<std::int64_t>(d + 1, 0)};
  for (std::size_t i = 0; i < an.chambers().size(); ++i) {
    const auto& proj = an.projector(i);
    const auto ev = proj.evaluate(x, +1);
    for (std::size_t k = 0; k <= d; ++k) pr.counts[k] += ev.closed_counts[k];
    const std::size_t k = proj.faces()[ev.accepting_face].dim;
    pr.per_chamber.push_back(k);
    ++pr.histogram[k];
  }
  return pr;
}

std::vector<std::int64_t> phi_slow(const Arrangement& a, std::span<const Rational> x, const Limits& limits) {
  std::vector<std::int64_t> counts(a.dim() + 1, 0);
  for (const auto& c : enumerate_chambers(a, limits)) {
    for (const auto& f : faces_of_chamber(a, c)) {
      if (indicator_F_plus_N(a, c, f, x, +1)) ++counts[f.dim];
    }
  }
  return counts;
}

std::vector<std::int64_t> phi_level(const Analysis& an, std::size_t j, std::span<const Rational> x) {
  check_point(an, x);
  std::vector<std::int64_t> counts(j + 1, 0);
  for (std::size_t i = 0; i < an.Rj(j).size(); ++i) {
    const auto ev = an.level_projector(j, i).evaluate(x, +1);
    for (std::size_t k = 0; k <= j; ++k) counts[k] += ev.closed_counts[k];
  }
  return counts;
}

ExceptionalReport in_exceptional(const Analysis& an, std::size_t k, std::span<const Rational> x) {
  check_point(an, x);
  if (k > an.dim()) throw BadParams("k exceeds the dimension");
  ExceptionalReport r{k, false, {}};
  collect(an.lower_pieces(k), x, r);
  collect(an.upper_pieces(k), x, r);
  r.member = !r.witnesses.empty();
  return r;
}

ExceptionalReport in_exceptional_level(const Analysis& an, std::size_t k, std::size_t j, std::span<const Rational> x) {
  check_point(an, x);
  if (k > j || j > an.dim()) throw BadParams("need k <= j <= d");
  ExceptionalReport r{k, false, {}};
  collect(an.lower_pieces(k), x, r);
  if (k < j) collect(an.upper_pieces(k), x, r);
  r.member = !r.witnesses.empty();
  return r;
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

void Report::require() const {
  for (const auto& c : checks) {
    if (!c.passed) throw VerificationFailure(subject + ": " + c.name + " failed: " + c.detail);
  }
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["subject"] = subject;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << (passed() ? "PASS " : "FAIL ") << subject << "\n";
  for (const auto& c : checks) {
    os << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  return os.str();
}

Report verify_theorem_main(const Analysis& an, std::span<const Rational> x) {
  const PhiProfile pr = phi(an, x);
  const auto& a = an.a();
  Report r{"theorem at x=" + format_point(x), {}};
  const auto total = std::accumulate(pr.histogram.begin(), pr.histogram.end(), std::int64_t{0});
  r.add("histogram sums to #chambers", total == static_cast<std::int64_t>(an.chambers().size()),
        std::to_string(total) + " vs " + std::to_string(an.chambers().size()));
  bool generic = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto ex = in_exceptional(an, k, x);
    const std::string tag = "k=" + std::to_string(k);
    const std::string vals = "phi=" + std::to_string(pr.counts[k]) + " a=" + std::to_string(a[k]);
    r.add(tag + " phi >= a", pr.counts[k] >= a[k], vals);
    if (ex.member) {
      generic = false;
      continue;
    }
    r.add(tag + " phi = a off E_k", pr.counts[k] == a[k], vals);
    r.add(tag + " histogram = phi off E_k", pr.histogram[k] == pr.counts[k],
          "hist=" + std::to_string(pr.histogram[k]));
  }
  if (generic) {
    const auto sum = std::accumulate(pr.counts.begin(), pr.counts.end(), std::int64_t{0});
    r.add("sum of phi = #chambers", sum == static_cast<std::int64_t>(an.chambers().size()), join(pr.counts));
  }
  return r;
}

Report verify_theorem_j_level(const Analysis& an, std::size_t j, std::span<const Rational> x) {
  const auto counts = phi_level(an, j, x);
  const auto a = an.level_a(j);
  Report r{"level " + std::to_string(j) + " theorem at x=" + format_point(x), {}};
  for (std::size_t k = 0; k <= j; ++k) {
    const std::string tag = "k=" + std::to_string(k) + " j=" + std::to_string(j);
    const std::string vals = "sum=" + std::to_string(counts[k]) + " a=" + std::to_string(a[k]);
    r.add(tag + " sum >= a", counts[k] >= a[k], vals);
    if (!in_exceptional_level(an, k, j, x).member) r.add(tag + " sum = a off E_kj", counts[k] == a[k], vals);
  }
  return r;
}

Cone chamber_polar(const Arrangement& a, const Chamber& c) {
  Cone polar;
  polar.ambient_dim = a.dim();
  polar.has_generator_form = true;
  for (std::size_t i = 0; i < a.size(); ++i) polar.generators.push_back(scale(Rational(-c.signs[i]), a[i].normal));
  return polar;
}

bool in_dual_exceptional(const Analysis& an, std::span<const Rational> x) {
  check_point(an, x);
  for (const auto& f : an.poset().flats()) {
    if (f.dim() == 0) continue;
    bool orth = true;
    for (const auto& d : f.directions()) orth = orth && sgn(dot(d, x)) == 0;
    if (orth) return true;
  }
  return false;
}

Report verify_prop_k0(const Analysis& an, std::span<const Rational> x) {
  const Arrangement& arr = an.arrangement();
  if (!arr.is_linear()) throw NotLinear();
  check_point(an, x);
  std::int64_t sum = 0;
  for (const auto& c : an.chambers()) sum += in_cone(chamber_polar(arr, c), x) ? 1 : 0;
  const std::int64_t a0 = an.a()[0];
  const std::string vals = "sum=" + std::to_string(sum) + " a0=" + std::to_string(a0);
  Report r{"dual cone sum at x=" + format_point(x), {}};
  r.add("sum >= a0", sum >= a0, vals);
  const bool exceptional = in_dual_exceptional(an, x);
  if (!exceptional) r.add("sum = a0 off the dual exceptional set", sum == a0, vals);
  if (arr.rank() == arr.dim()) r.add("x lies in some polar chamber", sum >= 1, vals);
  if (!exceptional && !in_exceptional(an, 0, x).member) {
    const auto p0 = phi(an, x).counts[0];
    r.add("phi_0 = dual cone sum", p0 == sum, "phi_0=" + std::to_string(p0));
  }
  return r;
}

std::int64_t mcmullen_sum(const CellProjector& p, std::span<const Rational> x) {
  const auto ev = p.evaluate(x, -1);
  std::int64_t s = 0;
  for (std::size_t k = 0; k < ev.closed_counts.size(); ++k) s += (k % 2 == 0 ? 1 : -1) * ev.closed_counts[k];
  return s;
}

Report verify_mcmullen(const Analysis& an, std::size_t chamber, std::span<const Rational> x) {
  check_point(an, x);
  const auto kind = classify_chamber(an.arrangement(), an.chambers().at(chamber));
  if (kind == ChamberKind::HasLine) throw HasLine();
  const std::int64_t want = kind == ChamberKind::Bounded ? 1 : 0;
  const std::int64_t got = mcmullen_sum(an.projector(chamber), x);
  Report r{"alternating sum for chamber " + an.chambers()[chamber].signs.str() + " at x=" + format_point(x), {}};
  r.add(std::string("alternating sum (") + to_string(kind) + ")", got == want,
        "got " + std::to_string(got) + " want " + std::to_string(want));
  return r;
}

Report verify_zaslavsky(const Analysis& an) {
  const Arrangement& arr = an.arrangement();
  const std::size_t d = arr.dim();
  const std::size_t rk = arr.rank();
  const auto& chi = an.charpoly();
  const std::int64_t n = static_cast<std::int64_t>(an.chambers().size());
  std::int64_t bounded = 0, relbounded = 0;
  for (const auto& c : an.chambers()) {
    bounded += classify_chamber(arr, c) == ChamberKind::Bounded ? 1 : 0;
    relbounded += is_relatively_bounded(arr, c) ? 1 : 0;
  }
  const std::int64_t total = (d % 2 == 0 ? 1 : -1) * chi.eval(-1);
  const std::int64_t signed_at_1 = (rk % 2 == 0 ? 1 : -1) * chi.eval(1);
  Report r{"chamber counts", {}};
  r.add("#chambers = (-1)^d chi(-1)", n == total, std::to_string(n) + " vs " + std::to_string(total));
  r.add("#relatively bounded = (-1)^rank chi(1)", relbounded == signed_at_1,
        std::to_string(relbounded) + " vs " + std::to_string(signed_at_1));
  if (rk == d) {
    r.add("#bounded = (-1)^rank chi(1)", bounded == signed_at_1,
          std::to_string(bounded) + " vs " + std::to_string(signed_at_1));
    std::int64_t alt = 0;
    for (std::size_t k = 0; k <= d; ++k) alt += (k % 2 == 0 ? 1 : -1) * an.a()[k];
    r.add("#bounded = alternating sum of a_k", bounded == alt, std::to_string(alt));
  } else {
    r.add("no bounded chamber below full rank", bounded == 0, std::to_string(bounded));
  }
  if (arr.is_linear() && arr.size() > 0) r.add("linear: chi(1) = 0", chi.eval(1) == 0, std::to_string(chi.eval(1)));
  return r;
}

std::vector<Vector> test_points(const Analysis& an, std::size_t count, std::uint64_t seed) {
  static constexpr long kDenominators[] = {1, 3, 5, 7, 9};
  std::mt19937_64 rng(seed);
  auto small = [&](long range) { return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range; };
  auto rational = [&](long range) { return make_rational(small(range), kDenominators[rng() % 5]); };
  const auto& flats = an.poset().flats();
  const Arrangement& arr = an.arrangement();
  std::vector<Vector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Vector x(an.dim());
    if (i % 3 == 2 && flats.size() > 1) {
      const Flat& f = flats[1 + rng() % (flats.size() - 1)];
      x = f.point();
      for (const auto& dir : f.directions()) {
        const Rational c = rational(4);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += c * dir[k];
      }
      if (rng() % 2 == 0) {
        const auto& n = arr[f.containing[rng() % f.containing.size()]].normal;
        const Rational c = rational(3);
        for (std::size_t k = 0; k < x.size(); ++k) x[k] += c * n[k];
      }
    } else {
      for (auto& c : x) c = rational(20);
    }
    out.push_back(std::move(x));
  }
  return out;
}

GroupType parse_group_type(const std::string& s) {
  if (s == "A") return GroupType::A;
  if (s == "B") return GroupType::B;
  if (s == "D") return GroupType::D;
  if (s == "I2") return GroupType::I2;
  throw BadParams("unknown group type '" + s + "' (expected A, B, D or I2)");
}

std::vector<Matrix> reflection_group(GroupType type, std::size_t rank) {
  std::size_t n = rank;
  bool signed_perm = type == GroupType::B || type == GroupType::D;
  bool even_signs = type == GroupType::D;
  bool perms = true;
  if (type == GroupType::I2) {
    n = 2;
    if (rank == 1) {
      return {permutation_matrix({0, 1}, {1, 1}), permutation_matrix({0, 1}, {1, -1})};
    } else if (rank == 2) {
      signed_perm = true;
      perms = false;
    } else if (rank == 4) {
      signed_perm = true;
    } else {
      throw BadParams("I2(m) has rational matrices only for m in {1, 2, 4}");
    }
  }
  if (n == 0) throw BadParams("group rank must be positive");
  if (n > 6) throw BadParams("group too large to enumerate");
  std::vector<Matrix> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const std::size_t masks = signed_perm ? (std::size_t{1} << n) : 1;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      std::vector<int> signs(n, 1);
      std::size_t flips = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          signs[i] = -1;
          ++flips;
        }
      }
      if (even_signs && flips % 2 == 1) continue;
      out.push_back(permutation_matrix(perm, signs));
    }
  } while (perms && std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Arrangement reflection_arrangement(GroupType type, std::size_t rank) {
  GeneratorSpec spec;
  spec.dim = rank;
  switch (type) {
    case GroupType::A: spec.kind = Kind::BraidA; break;
    case GroupType::B: spec.kind = Kind::TypeB; break;
    case GroupType::D: spec.kind = Kind::TypeD; break;
    case GroupType::I2:
      if (rank == 1) return Arrangement(2, {Hyperplane{{0, 1}, 0}});
      if (rank == 2) return generate({Kind::Boolean, 2});
      if (rank == 4) return generate({Kind::TypeB, 2});
      throw BadParams("I2(m) has rational matrices only for m in {1, 2, 4}");
  }
  return generate(spec);
}

Report verify_orbit_reflection(GroupType type, std::size_t rank, std::span<const Rational> x) {
  const Analysis an(reflection_arrangement(type, rank));
  check_point(an, x);
  const auto group = reflection_group(type, rank);
  if (group.size() != an.chambers().size()) {
    throw Inconsistent("group order differs from the number of chambers");
  }
  const std::size_t d = an.dim();
  // Fundamental chamber: x_1 > x_2 > ... > x_d (> 0 where a coordinate
  // mirror exists).
  Vector w(d);
  for (std::size_t i = 0; i < d; ++i) w[i] = static_cast<long>(d - i);
  if (type == GroupType::I2 && rank == 1) w = {0, 1};
  const SignVector fundamental = sign_vector(an.arrangement(), w);
  std::size_t c = an.chambers().size();
  for (std::size_t i = 0; i < an.chambers().size(); ++i) {
    if (an.chambers()[i].signs == fundamental) c = i;
  }
  if (c == an.chambers().size()) throw Inconsistent("fundamental chamber not found");

  std::vector<std::int64_t> orbit(d + 1, 0);
  for (const auto& g : group) ++orbit[an.projector(c).project(hyparr::apply(g, x)).k];
  const PhiProfile pr = phi(an, x);
  const auto& a = an.a();
  Report r{"orbit of x=" + format_point(x) + " (group order " + std::to_string(group.size()) + ")", {}};
  r.add("orbit counts = chamber histogram", orbit == pr.histogram, join(orbit) + " vs " + join(pr.histogram));
  for (std::size_t k = 0; k <= d; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    if (in_exceptional(an, k, x).member) {
      r.add(tag + " phi >= a on E_k", pr.counts[k] >= a[k],
            "phi=" + std::to_string(pr.counts[k]) + " a=" + std::to_string(a[k]));
    } else {
      r.add(tag + " orbit count = a", orbit[k] == a[k],
            "orbit=" + std::to_string(orbit[k]) + " a=" + std::to_string(a[k]));
    }
  }
  return r;
}

}  // namespace hyparr

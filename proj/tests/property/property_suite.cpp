#include "property_suite.hpp"

#include <random>

#include "hyparr/analysis.hpp"
#include "hyparr/cones.hpp"
#include "hyparr/gen.hpp"
#include "hyparr/verify.hpp"

namespace property {

using namespace hyparr;

std::size_t Outcome::failed() const {
  std::size_t n = 0;
  for (const auto& [name, t] : tally) n += t.second;
  return n;
}

namespace {

bool same(std::span<const Rational> a, std::span<const Rational> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (cmp(a[i], b[i]) != 0) return false;
  }
  return true;
}

Vector small_vector(std::mt19937_64& rng, std::size_t d) {
  Vector v(d);
  for (auto& c : v) c = make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
  return v;
}

}  // namespace

Outcome run(std::size_t cases, std::uint64_t seed) {
  Outcome out;
  out.cases = cases;
  std::mt19937_64 rng(seed);
  auto record = [&](const std::string& name, bool ok, const std::string& where) {
    auto& t = out.tally[name];
    ++t.first;
    if (!ok) {
      ++t.second;
      if (out.failures.size() < 20) out.failures.push_back(name + " @ " + where);
    }
  };

  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t d = 1 + rng() % 3;
    const bool linear = d > 1 && rng() % 3 == 0;
    const std::size_t m = 1 + rng() % (linear ? 4 : 5);
    const std::uint64_t arr_seed = rng();
    const Analysis an(generate({Kind::Random, d, m, arr_seed, linear}));
    const Arrangement& a = an.arrangement();
    const std::size_t ci = rng() % an.chambers().size();
    const Chamber& chamber = an.chambers()[ci];
    const CellProjector& proj = an.projector(ci);

    // Half of the points are plain random, the rest come from the flat-biased
    // generator so that boundaries and exceptional sets are hit.
    Vector x = small_vector(rng, d);
    if (rng() % 2) {
      const auto pts = test_points(an, 3, rng());
      x = pts[rng() % pts.size()];
    }
    const std::string where = "seed " + std::to_string(arr_seed) + " d=" + std::to_string(d) + " m=" +
                              std::to_string(m) + " chamber " + chamber.signs.str() + " x=" + format_point(x);

    const auto p = proj.project(x);

    // idempotence
    const auto pp = proj.project(p.point);
    record("idempotence", same(pp.point, p.point) && pp.k == p.k, where);

    // minimality against 200 points of the chamber (convex combinations of
    // face witnesses)
    {
      const auto& faces = proj.faces();
      const Rational best = distance_sq(x, p.point);
      bool ok = in_closed_cell(a, chamber.signs, p.point);
      for (int s = 0; s < 200 && ok; ++s) {
        Vector y(d);
        Rational total = 0;
        for (int t = 0; t < 3; ++t) {
          const Rational w = make_rational(1 + static_cast<long>(rng() % 5));
          const auto& f = faces[rng() % faces.size()];
          y = add(y, scale(w, f.witness));
          total += w;
        }
        y = scale(1 / total, y);
        ok = distance_sq(x, y) >= best;
      }
      record("minimality", ok, where);
    }

    // exactly one face accepts, checked through freshly built normal cones
    {
      const auto faces = faces_of_chamber(a, chamber);
      const auto resid = sub(x, p.point);
      const auto at = sign_vector(a, p.point);
      int accepting = 0;
      bool agrees = false;
      for (const auto& f : faces) {
        if (f.signs != at) continue;
        if (in_cone(normal_cone(a, chamber, f), resid)) {
          ++accepting;
          agrees = f.signs == p.face.signs;
        }
      }
      record("unique accepting face", accepting == 1 && agrees, where);
    }

    // dual involution on every face of the chamber
    {
      bool ok = true;
      for (const auto& f : proj.faces()) {
        const auto n = normal_cone(a, chamber, f);
        const auto t = tangent_cone(a, chamber, f);
        const auto dn = dual(n);
        const auto ddn = dual(dn);
        for (int s = 0; s < 4 && ok; ++s) {
          const auto v = small_vector(rng, d);
          ok = in_halfspaces(dn, v) == in_halfspaces(t, v) && in_cone(ddn, v) == in_cone(n, v);
        }
        const auto dt = dual(t);
        for (const auto& g : n.generators) ok = ok && in_cone(ddn, g) && in_cone(dt, g);
      }
      record("dual involution", ok, where);
    }

    // sum of phi equals the chamber count off the exceptional sets
    {
      const auto pr = phi(an, x);
      std::int64_t sum = 0;
      for (auto v : pr.counts) sum += v;
      bool generic = true;
      for (std::size_t k = 0; k <= d; ++k) generic = generic && !in_exceptional(an, k, x).member;
      const auto chambers = static_cast<std::int64_t>(an.chambers().size());
      record("sum of phi = #chambers", generic ? sum == chambers : sum >= chambers, where);
    }

    // the prepared indicators agree with the slow path
    {
      bool ok = true;
      for (std::size_t i = 0; i < proj.faces().size() && ok; ++i) {
        const int sign = i % 2 ? -1 : 1;
        ok = proj.indicator(i, x, sign) == indicator_F_plus_N(a, chamber, proj.faces()[i], x, sign);
      }
      record("indicator consistency", ok, where);
    }
  }
  return out;
}

}  // namespace property

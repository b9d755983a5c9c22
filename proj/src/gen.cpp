#include "hyparr/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

Vector unit(std::size_t d, std::size_t i) {
  Vector v(d);
  v[i] = 1;
  return v;
}

Hyperplane linear(Vector normal) { return Hyperplane{std::move(normal), 0}; }

// Polynomial product of linear factors (t - r).
CharPoly product_of_roots(const std::vector<std::int64_t>& roots) {
  std::vector<std::int64_t> c{1};
  for (auto r : roots) {
    std::vector<std::int64_t> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return CharPoly{c};
}

void add_pm_pairs(std::size_t d, std::vector<Hyperplane>& hs) {
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector minus(d), plus(d);
      minus[i] = 1;
      minus[j] = -1;
      plus[i] = 1;
      plus[j] = 1;
      hs.push_back(linear(std::move(minus)));
      hs.push_back(linear(std::move(plus)));
    }
  }
}

std::vector<Hyperplane> dihedral_lines(std::size_t m) {
  // Line k has angle k*pi/m; its direction is the rational point of the unit
  // circle with half-angle tangent t_k rounded to a grid, i.e.
  // ((1 - t^2), 2t) / (1 + t^2). The normal is (-2t, 1 - t^2).
  for (long grid = 64; grid <= (1L << 20); grid *= 2) {
    std::vector<Hyperplane> hs;
    bool distinct = true;
    for (std::size_t k = 0; k < m && distinct; ++k) {
      const double half = static_cast<double>(k) * std::numbers::pi / (2.0 * static_cast<double>(m));
      const Rational t = make_rational(std::lround(std::tan(half) * static_cast<double>(grid)), grid);
      Hyperplane h = canonicalize(Vector{-2 * t, 1 - t * t}, 0);
      distinct = std::find(hs.begin(), hs.end(), h) == hs.end();
      hs.push_back(std::move(h));
    }
    if (distinct) return hs;
  }
  throw BadParams("could not produce distinct dihedral lines");
}

}  // namespace

Kind parse_kind(const std::string& s) {
  if (s == "boolean") return Kind::Boolean;
  if (s == "braid_A") return Kind::BraidA;
  if (s == "type_B") return Kind::TypeB;
  if (s == "type_D") return Kind::TypeD;
  if (s == "dihedral") return Kind::Dihedral;
  if (s == "parallel_pair") return Kind::ParallelPair;
  if (s == "triangle") return Kind::Triangle;
  if (s == "random") return Kind::Random;
  throw BadParams("unknown generator kind '" + s + "'");
}

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Boolean: return "boolean";
    case Kind::BraidA: return "braid_A";
    case Kind::TypeB: return "type_B";
    case Kind::TypeD: return "type_D";
    case Kind::Dihedral: return "dihedral";
    case Kind::ParallelPair: return "parallel_pair";
    case Kind::Triangle: return "triangle";
    case Kind::Random: return "random";
  }
  return "?";
}

Arrangement generate(const GeneratorSpec& spec) {
  const std::size_t d = spec.dim;
  std::vector<Hyperplane> hs;
  switch (spec.kind) {
    case Kind::Boolean:
      for (std::size_t i = 0; i < d; ++i) hs.push_back(linear(unit(d, i)));
      return Arrangement(d, std::move(hs));
    case Kind::BraidA:
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          Vector v(d);
          v[i] = 1;
          v[j] = -1;
          hs.push_back(linear(std::move(v)));
        }
      }
      return Arrangement(d, std::move(hs));
    case Kind::TypeB:
      for (std::size_t i = 0; i < d; ++i) hs.push_back(linear(unit(d, i)));
      add_pm_pairs(d, hs);
      return Arrangement(d, std::move(hs));
    case Kind::TypeD:
      add_pm_pairs(d, hs);
      return Arrangement(d, std::move(hs));
    case Kind::Dihedral:
      if (d != 2) throw BadParams("dihedral arrangements live in dimension 2");
      if (spec.count < 1) throw BadParams("dihedral needs at least one line");
      return Arrangement(2, dihedral_lines(spec.count));
    case Kind::ParallelPair:
      if (d < 1) throw BadParams("parallel_pair needs dimension >= 1");
      hs.push_back(Hyperplane{unit(d, 0), 0});
      hs.push_back(Hyperplane{unit(d, 0), 1});
      return Arrangement(d, std::move(hs));
    case Kind::Triangle:
      if (d != 2) throw BadParams("triangle lives in dimension 2");
      return Arrangement(2, {Hyperplane{{1, 0}, 0}, Hyperplane{{0, 1}, 0}, Hyperplane{{1, 1}, 1}});
    case Kind::Random: {
      if (d < 1) throw BadParams("random arrangements need dimension >= 1");
      std::mt19937_64 rng(spec.seed);
      auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
      std::size_t attempts = 0;
      while (hs.size() < spec.count) {
        if (++attempts > 1000 * (spec.count + 1)) throw BadParams("cannot draw that many distinct hyperplanes");
        Vector n(d);
        for (auto& c : n) c = draw(-3, 3);
        if (is_zero(n)) continue;
        const Rational c = spec.linear ? 0 : draw(-2, 2);
        Hyperplane h = canonicalize(n, c);
        if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
        hs.push_back(std::move(h));
      }
      return Arrangement(d, std::move(hs));
    }
  }
  throw BadParams("unknown generator kind");
}

CharPoly expected_charpoly(Kind kind, std::size_t dim, std::size_t count) {
  const auto d = static_cast<std::int64_t>(dim);
  std::vector<std::int64_t> roots;
  switch (kind) {
    case Kind::Boolean:
      roots.assign(dim, 1);
      break;
    case Kind::BraidA:
      if (dim == 0) return CharPoly{{1}};
      roots.push_back(0);
      for (std::int64_t i = 1; i < d; ++i) roots.push_back(i);
      break;
    case Kind::TypeB:
      for (std::int64_t i = 1; i <= d; ++i) roots.push_back(2 * i - 1);
      break;
    case Kind::TypeD:
      if (dim == 0) return CharPoly{{1}};
      roots.push_back(d - 1);
      for (std::int64_t i = 1; i < d; ++i) roots.push_back(2 * i - 1);
      break;
    case Kind::Dihedral: {
      if (dim != 2) throw NoClosedForm("dihedral closed form is for dimension 2");
      const auto m = static_cast<std::int64_t>(count);
      return CharPoly{{m - 1, -m, 1}};
    }
    default:
      throw NoClosedForm(std::string("no closed form for ") + to_string(kind));
  }
  return product_of_roots(roots);
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> out;
  auto push = [&](std::string name, GeneratorSpec spec) {
    out.push_back({std::move(name), spec, generate(spec)});
  };
  for (std::size_t d = 1; d <= 4; ++d) push("boolean_" + std::to_string(d), {Kind::Boolean, d});
  for (std::size_t n = 2; n <= 4; ++n) push("braid_A_" + std::to_string(n), {Kind::BraidA, n});
  for (std::size_t d = 1; d <= 3; ++d) push("type_B_" + std::to_string(d), {Kind::TypeB, d});
  for (std::size_t d = 2; d <= 3; ++d) push("type_D_" + std::to_string(d), {Kind::TypeD, d});
  push("parallel_pair", {Kind::ParallelPair, 2});
  push("triangle", {Kind::Triangle, 2});
  for (std::uint64_t s = 1; s <= 20; ++s) {
    GeneratorSpec spec{Kind::Random, 1 + s % 3, 1 + s % 6, s, s % 4 == 0};
    push("random_" + std::to_string(s), spec);
  }
  return out;
}

}  // namespace hyparr

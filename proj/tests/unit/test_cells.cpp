#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "hyparr/cells.hpp"
#include "hyparr/error.hpp"
#include "hyparr/poset.hpp"

using namespace hyparr;
using testing::P;

namespace {

Chamber chamber_with(const Arrangement& a, const std::string& signs) {
  for (auto& c : enumerate_chambers(a)) {
    if (c.signs.str() == signs) return c;
  }
  FAIL("no chamber " << signs);
  return {};
}

}  // namespace

TEST_CASE("chamber examples") {
  CHECK(enumerate_chambers(testing::axes()).size() == 4);
  CHECK(enumerate_chambers(Arrangement(3)).size() == 1);
  CHECK(enumerate_chambers(Arrangement(0)).size() == 1);
  CHECK(enumerate_chambers(testing::parallel_pair()).size() == 3);
  CHECK(enumerate_chambers(testing::triangle()).size() == 7);
  CHECK_THROWS_AS(enumerate_chambers(generate({Kind::TypeB, 4}), Limits{8}), SizeLimit);
}

TEST_CASE("chamber witnesses are interior and sign vectors distinct") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto a = generate({Kind::Random, 1 + seed % 3, 1 + seed % 6, seed, seed % 4 == 0});
    const auto cs = enumerate_chambers(a);
    CAPTURE(seed);
    CHECK(cs.size() == oracle::chamber_count(a));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      CHECK(sign_vector(a, cs[i].witness) == cs[i].signs);
      CHECK(!cs[i].signs.has_zero());
      if (i) CHECK(cs[i - 1].signs < cs[i].signs);
    }
    CHECK(static_cast<std::int64_t>(cs.size()) == (a.dim() % 2 ? -1 : 1) * char_poly_whitney(a).eval(-1));
  }
}

TEST_CASE("face examples") {
  const auto axes = testing::axes();
  CHECK(face_counts_by_dim(faces_of_chamber(axes, chamber_with(axes, "++")), 2) == std::vector<std::size_t>{1, 2, 1});
  const auto one = testing::arr(2, {{"1,0", "0"}});
  CHECK(face_counts_by_dim(faces_of_chamber(one, chamber_with(one, "+")), 2) == std::vector<std::size_t>{0, 1, 1});
  const auto pp = testing::parallel_pair();
  CHECK(face_counts_by_dim(faces_of_chamber(pp, chamber_with(pp, "+-")), 2) == std::vector<std::size_t>{0, 2, 1});
  const auto tri = testing::triangle();
  CHECK(face_counts_by_dim(faces_of_chamber(tri, chamber_with(tri, "++-")), 2) == std::vector<std::size_t>{3, 3, 1});
}

TEST_CASE("face witnesses and dimensions") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto a = generate({Kind::Random, 1 + seed % 3, 1 + seed % 6, seed, seed % 4 == 0});
    for (const auto& c : enumerate_chambers(a)) {
      for (const auto& f : faces_of_chamber(a, c)) {
        CHECK(sign_vector(a, f.witness) == f.signs);
        CHECK(f.signs.conforms_to(c.signs));
        Matrix rows;
        for (auto i : f.zero_set()) rows.push_back(a[i].normal);
        CHECK(f.dim == a.dim() - rank(rows, a.dim()));
      }
    }
  }
}

TEST_CASE("relative interiors partition each chamber") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = generate({Kind::Random, 2, 1 + seed % 5, seed, false});
    for (const auto& c : enumerate_chambers(a)) {
      const auto faces = faces_of_chamber(a, c);
      for (int t = 0; t < 60; ++t) {
        // grid points with small denominators hit lower-dimensional faces often
        Vector x{make_rational(static_cast<long>(rng() % 13) - 6, 2), make_rational(static_cast<long>(rng() % 13) - 6, 2)};
        if (!in_closed_cell(a, c.signs, x)) continue;
        const auto s = sign_vector(a, x);
        int hits = 0;
        for (const auto& f : faces) hits += f.signs == s ? 1 : 0;
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("R_j examples") {
  const auto axes = testing::axes();
  CHECK(enumerate_Rj(axes, 1).size() == 4);
  CHECK(enumerate_Rj(axes, 0).size() == 1);
  CHECK(enumerate_Rj(axes, 2).size() == enumerate_chambers(axes).size());
  CHECK_THROWS_AS(enumerate_Rj(axes, 3), BadParams);
}

TEST_CASE("each j-face lies in exactly one j-flat") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto a = generate({Kind::Random, 3, 4, seed, false});
    const IntersectionPoset p(a);
    for (std::size_t j = 0; j <= 3; ++j) {
      for (const auto& f : enumerate_Rj(a, j)) {
        int hits = 0;
        for (auto idx : p.of_dim(j)) {
          const AffineSubspace s(p[idx].point(), p[idx].directions());
          hits += s.contains(f.witness) ? 1 : 0;
        }
        CHECK(hits == 1);
      }
    }
  }
}

TEST_CASE("chamber classification") {
  const auto axes = testing::axes();
  CHECK(classify_chamber(axes, chamber_with(axes, "++")) == ChamberKind::UnboundedLineFree);
  const auto tri = testing::triangle();
  CHECK(classify_chamber(tri, chamber_with(tri, "++-")) == ChamberKind::Bounded);
  const auto one = testing::arr(2, {{"1,0", "0"}});
  CHECK(classify_chamber(one, chamber_with(one, "+")) == ChamberKind::HasLine);
  CHECK(classify_chamber(Arrangement(0), enumerate_chambers(Arrangement(0))[0]) == ChamberKind::Bounded);
  const auto pp = testing::parallel_pair();
  const auto slab = chamber_with(pp, "+-");
  CHECK(classify_chamber(pp, slab) == ChamberKind::HasLine);
  CHECK(is_relatively_bounded(pp, slab));
  CHECK(!is_relatively_bounded(pp, chamber_with(pp, "++")));
}

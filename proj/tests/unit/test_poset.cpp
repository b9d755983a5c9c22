#include <doctest.h>

#include "../oracles.hpp"
#include "helpers.hpp"
#include "hyparr/error.hpp"
#include "hyparr/poset.hpp"

using namespace hyparr;
using testing::I;
using testing::P;

namespace {

std::vector<std::size_t> dims_histogram(const IntersectionPoset& p) {
  std::vector<std::size_t> h(p.ambient_dim() + 1, 0);
  for (const auto& f : p.flats()) ++h[f.dim()];
  return h;
}

}  // namespace

TEST_CASE("intersection poset examples") {
  const IntersectionPoset axes(testing::axes());
  CHECK(dims_histogram(axes) == std::vector<std::size_t>{1, 2, 1});
  CHECK(axes[0].dim() == 2);
  CHECK(axes[0].containing.empty());

  const IntersectionPoset pp(testing::parallel_pair());
  CHECK(dims_histogram(pp) == std::vector<std::size_t>{0, 2, 1});

  const IntersectionPoset braid(generate({Kind::BraidA, 3}));
  CHECK(dims_histogram(braid) == std::vector<std::size_t>{0, 1, 3, 1});
  const auto& line = braid[braid.of_dim(1)[0]];
  CHECK(line.containing == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("containing sets are complete") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const auto a = generate({Kind::Random, 3, 5, seed, seed % 3 == 0});
    const IntersectionPoset p(a);
    for (const auto& f : p.flats()) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        bool inside = sgn(a[i].residual(f.point())) == 0;
        for (const auto& d : f.directions()) inside = inside && sgn(dot(a[i].normal, d)) == 0;
        const bool listed = std::find(f.containing.begin(), f.containing.end(), i) != f.containing.end();
        CHECK(inside == listed);
      }
    }
  }
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly_whitney(testing::axes()).coeffs == I({1, -2, 1}));
  CHECK(char_poly_whitney(testing::axes()).abs() == I({1, 2, 1}));
  CHECK(char_poly_whitney(Arrangement(3)).coeffs == I({0, 0, 0, 1}));
  CHECK(char_poly_whitney(testing::parallel_pair()).coeffs == I({0, -2, 1}));
  CHECK(char_poly_whitney(testing::parallel_pair()).abs() == I({0, 2, 1}));
  CHECK(char_poly_moebius(testing::axes()).coeffs == I({1, -2, 1}));
  CHECK(char_poly_moebius(Arrangement(3)).coeffs == I({0, 0, 0, 1}));
  CHECK(char_poly_moebius(generate({Kind::BraidA, 3})).coeffs == I({0, 2, -3, 1}));
  CHECK(char_poly_whitney(testing::triangle()).coeffs == I({3, -3, 1}));
  CHECK(char_poly_whitney(Arrangement(0)).coeffs == I({1}));
  CHECK(char_poly_moebius(Arrangement(0)).coeffs == I({1}));
  CHECK(char_poly_whitney(testing::axes()).str() == "t^2 - 2t + 1");
}

TEST_CASE("Whitney and Moebius agree with the brute-force oracle") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t d = 1 + seed % 4;
    const auto a = generate({Kind::Random, d, 1 + seed % 7, seed, d > 1 && seed % 5 == 0});
    CAPTURE(seed);
    const auto w = char_poly_whitney(a);
    CHECK(w.coeffs == oracle::whitney(a));
    CHECK(char_poly_moebius(a) == w);
    // leading coefficient, sign pattern and the vanishing range
    const auto abs = w.abs();
    CHECK(abs[d] == 1);
    for (std::size_t k = 0; k <= d; ++k) {
      CHECK(abs[k] >= 0);
      if (k < d - a.rank()) CHECK(abs[k] == 0);
    }
  }
}

TEST_CASE("size limit") {
  const auto a = generate({Kind::TypeB, 4});  // 16 hyperplanes
  CHECK_THROWS_AS(char_poly_whitney(a, Limits{10}), SizeLimit);
  CHECK_NOTHROW(char_poly_whitney(a, Limits{16}));
}

TEST_CASE("restriction examples") {
  const auto axes = testing::axes();
  const IntersectionPoset p(axes);
  const auto r = restriction(axes, p, p.of_dim(1)[0]);
  CHECK(r.arrangement.dim() == 1);
  CHECK(r.arrangement.size() == 1);
  CHECK(r.arrangement[0].offset == 0);

  const auto braid = generate({Kind::BraidA, 3});
  const IntersectionPoset bp(braid);
  for (auto idx : bp.of_dim(2)) {
    const auto rb = restriction(braid, bp, idx);
    CHECK(rb.arrangement.dim() == 2);
    CHECK(rb.arrangement.size() == 1);  // the other two traces coincide
  }

  const auto whole = restriction(axes, p, 0);
  CHECK(whole.arrangement.size() == axes.size());
  CHECK(char_poly_moebius(whole.arrangement) == char_poly_moebius(axes));
}

TEST_CASE("restriction rejects foreign flats") {
  const auto axes = testing::axes();
  Flat bogus{AffineSolution{P("1,1"), {P("1,0")}}, {}};
  CHECK_THROWS_AS(restriction(axes, bogus), FlatNotInPoset);
  Flat axis{AffineSolution{P("0,3"), {P("0,-2")}}, {}};
  CHECK(restriction(axes, axis).arrangement.size() == 1);
}

TEST_CASE("level polynomials") {
  const auto axes = testing::axes();
  CHECK(char_poly_level(axes, 2) == char_poly_whitney(axes));
  CHECK(char_poly_level(axes, 1).coeffs == I({-2, 2}));
  CHECK(char_poly_level(axes, 1).abs() == I({2, 2}));
  CHECK(char_poly_level(axes, 0).coeffs == I({1}));
  CHECK_THROWS_AS(char_poly_level(axes, 3), BadParams);
  // level j leading coefficient counts the j-flats
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto a = generate({Kind::Random, 3, 4, seed, false});
    const IntersectionPoset p(a);
    for (std::size_t j = 0; j <= 3; ++j) {
      CHECK(char_poly_level(a, p, j).coeffs[j] == static_cast<std::int64_t>(p.of_dim(j).size()));
    }
    CHECK(char_poly_level(a, p, 3) == char_poly_whitney(a));
  }
}

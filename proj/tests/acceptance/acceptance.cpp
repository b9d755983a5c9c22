// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "../oracles.hpp"
#include "../property/property_suite.hpp"
#include "hyparr/analysis.hpp"
#include "hyparr/gen.hpp"
#include "hyparr/mc.hpp"
#include "hyparr/verify.hpp"

using namespace hyparr;

namespace {

// Pinned limits.
constexpr double kPaperExampleSeconds = 1.0;
constexpr double kCorpusSeconds = 120.0;
constexpr double kMonteCarloSeconds = 60.0;
constexpr std::size_t kCorpusPoints = 50;
constexpr std::uint64_t kPointSeed = 1;
constexpr std::size_t kMcmullenPoints = 100;
constexpr std::size_t kGenericK0 = 50;
constexpr std::size_t kExceptionalK0 = 20;
constexpr std::size_t kCoverK0 = 200;
constexpr std::size_t kMcSamples = 100000;
constexpr std::uint64_t kMcSeed = 12345;
constexpr double kBandZ = 4.0;
constexpr double kAngleOracleTolerance = 1e-3;
constexpr std::size_t kPropertyCases = 1000;
constexpr std::uint64_t kPropertySeed = 2024;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates failures; keeps the first message.
struct Tally {
  std::size_t checks = 0, failed = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failed++ == 0) first = what;
  }
  void report(const Report& r) {
    for (const auto& c : r.checks) expect(c.passed, r.subject + ": " + c.name + " " + c.detail);
  }
  Outcome outcome(const std::string& extra = {}) const {
    std::ostringstream os;
    os << checks << " checks, " << failed << " failed";
    if (!extra.empty()) os << "; " << extra;
    if (failed) os << "; first: " << first;
    return {failed == 0, os.str()};
  }
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Vector Q(const std::string& s) { return parse_point(s); }

Outcome ac1() {
  Tally t;
  const Analysis an(generate({Kind::Boolean, 2}));
  t.expect(an.charpoly().coeffs == std::vector<std::int64_t>{1, -2, 1}, "chi = (t-1)^2");
  t.expect(an.a() == std::vector<std::int64_t>{1, 2, 1}, "a = (1,2,1)");
  // closed forms from the worked example: phi_0 = 1 + [x1=0] + [x2=0] + [x=0], phi_1 = 2 phi_0
  for (const auto& [x, p0] : std::vector<std::pair<std::string, std::int64_t>>{{"3,4", 1}, {"0,4", 2}, {"0,0", 4}}) {
    const auto c = phi(an, Q(x)).counts;
    t.expect(c[0] == p0 && c[1] == 2 * p0, "phi at " + x + " = " + join(c));
  }
  t.expect(phi(an, Q("3,4")).counts == std::vector<std::int64_t>{1, 2, 1}, "phi(3,4) = (1,2,1)");
  return t.outcome("phi(0,4)=" + join(phi(an, Q("0,4")).counts) + " phi(0,0)=" + join(phi(an, Q("0,0")).counts));
}

Outcome ac2(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::size_t on_exceptional = 0;
  for (const auto& e : corpus) {
    const Analysis an(e.arrangement);
    for (const auto& x : test_points(an, kCorpusPoints, kPointSeed)) {
      const auto r = verify_theorem_main(an, x);
      t.report(r);
      for (std::size_t k = 0; k <= an.dim(); ++k) {
        if (in_exceptional(an, k, x).member) {
          ++on_exceptional;
          break;
        }
      }
    }
  }
  return t.outcome(std::to_string(corpus.size()) + " arrangements x " + std::to_string(kCorpusPoints) + " points, " +
                   std::to_string(on_exceptional) + " on some E_k");
}

Outcome ac3(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  for (const auto& e : corpus) {
    const Analysis an(e.arrangement, AnalysisOptions{{}, true});
    for (const auto& x : test_points(an, kCorpusPoints, kPointSeed)) {
      for (std::size_t j = 0; j <= an.dim(); ++j) t.report(verify_theorem_j_level(an, j, x));
    }
  }
  return t.outcome();
}

Outcome ac4(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::size_t closed = 0;
  for (const auto& e : corpus) {
    const auto w = char_poly_whitney(e.arrangement);
    t.expect(w == char_poly_moebius(e.arrangement), e.name + ": Whitney != Moebius");
    t.expect(w.coeffs == oracle::whitney(e.arrangement), e.name + ": Whitney != brute-force oracle");
    switch (e.spec.kind) {
      case Kind::Boolean:
      case Kind::BraidA:
      case Kind::TypeB:
      case Kind::TypeD:
        ++closed;
        t.expect(w == expected_charpoly(e.spec.kind, e.spec.dim), e.name + ": closed form mismatch " + w.str());
        break;
      default:
        break;
    }
  }
  for (std::size_t m = 1; m <= 8; ++m) {
    ++closed;
    const auto a = generate({Kind::Dihedral, 2, m});
    t.expect(char_poly_moebius(a) == expected_charpoly(Kind::Dihedral, 2, m), "dihedral " + std::to_string(m));
  }
  return t.outcome(std::to_string(closed) + " closed-form members");
}

Outcome ac5(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  for (const auto& e : corpus) t.report(verify_zaslavsky(Analysis(e.arrangement)));
  const auto tri = generate({Kind::Triangle, 2});
  const Analysis an(tri);
  std::size_t bounded = 0;
  for (const auto& c : an.chambers()) bounded += classify_chamber(tri, c) == ChamberKind::Bounded;
  t.expect(an.chambers().size() == 7 && bounded == 1, "triangle: " + std::to_string(bounded) + " bounded of " +
                                                          std::to_string(an.chambers().size()));
  return t.outcome("triangle " + std::to_string(bounded) + " bounded / " + std::to_string(an.chambers().size()));
}

// Vertices, edge midpoints (or a point on each unbounded edge), other face
// witnesses and exterior points, 100 per chamber.
std::vector<Vector> mcmullen_sample(const Analysis& an, std::size_t chamber, std::mt19937_64& rng) {
  const auto& faces = an.projector(chamber).faces();
  const std::size_t d = an.dim();
  std::vector<Vector> pts;
  std::vector<Vector> vertices;
  for (const auto& f : faces) {
    if (f.dim == 0) vertices.push_back(f.witness);
    pts.push_back(f.witness);
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      pts.push_back(scale(make_rational(1, 2), add(vertices[i], vertices[j])));
    }
  }
  while (pts.size() < kMcmullenPoints) {
    Vector x(d);
    for (auto& c : x) c = make_rational(static_cast<long>(rng() % 41) - 20, 1 + 2 * static_cast<long>(rng() % 3));
    pts.push_back(std::move(x));
  }
  pts.resize(kMcmullenPoints);
  return pts;
}

Outcome ac6(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::mt19937_64 rng(7);
  std::size_t chambers = 0, exterior = 0;
  for (const auto& e : corpus) {
    const Analysis an(e.arrangement);
    for (std::size_t c = 0; c < an.chambers().size(); ++c) {
      if (classify_chamber(e.arrangement, an.chambers()[c]) == ChamberKind::HasLine) continue;
      ++chambers;
      for (const auto& x : mcmullen_sample(an, c, rng)) {
        exterior += !in_closed_cell(e.arrangement, an.chambers()[c].signs, x);
        t.report(verify_mcmullen(an, c, x));
      }
    }
  }
  return t.outcome(std::to_string(chambers) + " chambers, " + std::to_string(exterior) + " exterior points");
}

// A point of L^perp for a flat L other than {0}: a combination of the
// normals of the hyperplanes containing L.
Vector dual_exceptional_point(const Analysis& an, std::mt19937_64& rng) {
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < an.poset().size(); ++i) {
    if (an.poset()[i].dim() > 0 && !an.poset()[i].containing.empty()) candidates.push_back(i);
  }
  if (candidates.empty()) candidates.push_back(0);  // only R^d itself: L^perp = {0}
  const auto& flat = an.poset()[candidates[rng() % candidates.size()]];
  Vector x(an.dim());
  for (auto h : flat.containing) {
    x = add(x, scale(make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2)),
                     an.arrangement()[h].normal));
  }
  return x;
}

Outcome ac7(const std::vector<CorpusEntry>& corpus) {
  Tally t;
  std::mt19937_64 rng(11);
  std::size_t members = 0, full_rank = 0, generic = 0, exceptional = 0;
  for (const auto& e : corpus) {
    if (!e.arrangement.is_linear()) continue;
    ++members;
    const Analysis an(e.arrangement);
    const std::size_t d = an.dim();
    auto random_point = [&] {
      Vector x(d);
      for (auto& c : x) c = make_rational(static_cast<long>(rng() % 199) - 99, 1 + 2 * static_cast<long>(rng() % 5));
      return x;
    };
    for (std::size_t n = 0; n < kGenericK0;) {
      const auto x = random_point();
      if (in_dual_exceptional(an, x)) continue;
      ++n;
      ++generic;
      t.report(verify_prop_k0(an, x));
    }
    for (std::size_t n = 0; n < kExceptionalK0; ++n) {
      const auto x = dual_exceptional_point(an, rng);
      t.expect(in_dual_exceptional(an, x), e.name + ": constructed point not exceptional");
      ++exceptional;
      t.report(verify_prop_k0(an, x));
    }
    if (e.arrangement.rank() == d) {
      ++full_rank;
      for (std::size_t n = 0; n < kCoverK0; ++n) {
        const auto r = verify_prop_k0(an, random_point());
        for (const auto& c : r.checks) {
          if (c.name == "x lies in some polar chamber") t.expect(c.passed, e.name + ": cover " + c.detail);
        }
      }
    }
  }
  return t.outcome(std::to_string(members) + " linear members (" + std::to_string(full_rank) + " full rank), " +
                   std::to_string(generic) + " generic and " + std::to_string(exceptional) + " exceptional points");
}

Outcome ac8() {
  Tally t;
  const auto b2 = generate({Kind::TypeB, 2});
  const auto w = oracle::whitney(b2);
  std::vector<std::int64_t> abs_w;
  for (std::size_t k = 0; k < w.size(); ++k) abs_w.push_back(std::abs(w[k]));
  t.expect(abs_w == std::vector<std::int64_t>{3, 4, 1}, "oracle a for B2 = " + join(abs_w));
  t.expect(Analysis(b2).a() == abs_w, "library a for B2");
  t.expect(reflection_group(GroupType::B, 2).size() == 8, "|B2| = 8");
  t.expect(reflection_group(GroupType::B, 3).size() == 48, "|B3| = 48");
  for (const auto& x : {"3/7,-5/11", "13/5,1/9", "-7/3,-2/17"}) t.report(verify_orbit_reflection(GroupType::B, 2, Q(x)));
  for (const auto& x : {"1/3,-2/5,7/9", "-11/7,3/13,5/3"}) t.report(verify_orbit_reflection(GroupType::B, 3, Q(x)));
  return t.outcome("B2 a = " + join(abs_w));
}

Outcome ac9() {
  Tally t;
  const Analysis b2(generate({Kind::TypeB, 2}));
  const auto est = estimate_intrinsic_volumes(b2, kMcSamples, kMcSeed);
  t.expect(est.aggregate_mismatches == 0, std::to_string(est.aggregate_mismatches) + " samples with aggregate != a");
  for (std::size_t k = 0; k <= 2; ++k) {
    t.expect(est.aggregate[k] == static_cast<std::int64_t>(kMcSamples) * b2.a()[k], "aggregate k=" + std::to_string(k));
  }
  KlivansSwartzOptions opt;
  opt.samples = kMcSamples;
  opt.seed = kMcSeed;
  opt.z = kBandZ;
  t.report(verify_klivans_swartz(b2, est, opt));

  // quadrant reference: closed form, checked against the angle-count oracle
  const auto orth = orthant_intrinsic(2);
  const auto angle = oracle::planar_cone_angle_count(0.0, std::acos(-1.0) / 2, 1000000);
  for (std::size_t k = 0; k < 3; ++k) t.expect(std::abs(orth[k] - angle[k]) <= kAngleOracleTolerance, "angle oracle");
  const Analysis axes(generate({Kind::Boolean, 2}));
  KlivansSwartzOptions q;
  q.samples = kMcSamples;
  q.seed = kMcSeed;
  q.z = kBandZ;
  q.per_cell_reference = orth;
  const auto qest = estimate_intrinsic_volumes(axes, kMcSamples, kMcSeed);
  t.report(verify_klivans_swartz(axes, qest, q));
  std::ostringstream os;
  os.precision(4);
  for (std::size_t c = 0; c < qest.cells.size(); ++c) {
    os << (c ? " " : "") << qest.cells[c].str() << "=(" << qest.nu(c, 0) << "," << qest.nu(c, 1) << ","
       << qest.nu(c, 2) << ")";
  }
  return t.outcome("resampled " + std::to_string(est.resampled) + "; quadrants " + os.str());
}

Outcome ac10() {
  const auto out = property::run(kPropertyCases, kPropertySeed);
  std::ostringstream os;
  os << out.cases << " cases";
  for (const auto& [name, t] : out.tally) os << "; " << name << " " << t.first - t.second << "/" << t.first;
  if (!out.failures.empty()) os << "; first failure: " << out.failures.front();
  return {out.failed() == 0, os.str()};
}

}  // namespace

int main() {
  const auto corpus = standard_corpus();
  bool all = true;
  auto run = [&](const std::string& id, const std::string& title, double limit, const std::function<Outcome()>& f) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs << " s";
    if (limit > 0) {
      time << " (limit " << limit << " s)";
      if (secs > limit) {
        o.pass = false;
        o.detail += "; over time limit";
      }
    }
    all = all && o.pass;
    std::cout << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.detail << " [" << time.str()
              << "]" << std::endl;
  };

  run("AC1", "worked example on the coordinate axes", kPaperExampleSeconds, ac1);
  run("AC2", "main identity on the corpus", kCorpusSeconds, [&] { return ac2(corpus); });
  run("AC3", "level-j identity on the corpus", kCorpusSeconds, [&] { return ac3(corpus); });
  run("AC4", "Whitney = Moebius and closed forms", 0, [&] { return ac4(corpus); });
  run("AC5", "chamber counts (Zaslavsky)", 0, [&] { return ac5(corpus); });
  run("AC6", "alternating face sums", 0, [&] { return ac6(corpus); });
  run("AC7", "dual cone sums and cover", 0, [&] { return ac7(corpus); });
  run("AC8", "reflection group orbits", 0, ac8);
  run("AC9", "Monte Carlo intrinsic volumes", kMonteCarloSeconds, ac9);
  run("AC10", "property suite", 0, ac10);
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}

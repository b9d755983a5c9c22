#include "hyparr/mc.hpp"

#include <cmath>
#include <sstream>

#include "hyparr/error.hpp"

namespace hyparr {

Vector gaussian_sample(std::mt19937_64& rng, std::size_t d) {
  static const Rational step(Integer(1), Integer(1) << 53);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(d);
  for (auto& c : v) {
    const long long n = std::llround(std::ldexp(normal(rng), 53));
    c = Rational(Integer(std::to_string(n))) * step;
  }
  return v;
}

double IntrinsicEstimate::nu(std::size_t cell, std::size_t k) const {
  return static_cast<double>(counts.at(cell).at(k)) / static_cast<double>(samples);
}

double IntrinsicEstimate::std_error(std::size_t cell, std::size_t k) const {
  const double p = nu(cell, k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

IntrinsicEstimate estimate_intrinsic_volumes(const Analysis& an, std::size_t samples, std::uint64_t seed,
                                             std::optional<std::size_t> level) {
  if (!an.arrangement().is_linear()) throw NotLinear();
  if (samples < 1) throw BadParams("need at least one sample");
  const std::size_t d = an.dim();
  const std::size_t j = level.value_or(d);

  std::vector<const CellProjector*> cells;
  IntrinsicEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.level = j;
  std::vector<std::int64_t> a;
  if (level) {
    a = an.level_a(j);
    for (std::size_t i = 0; i < an.Rj(j).size(); ++i) {
      cells.push_back(&an.level_projector(j, i));
      est.cells.push_back(an.Rj(j)[i].signs);
    }
  } else {
    a = an.a();
    for (std::size_t i = 0; i < an.chambers().size(); ++i) {
      cells.push_back(&an.projector(i));
      est.cells.push_back(an.chambers()[i].signs);
    }
  }
  est.counts.assign(cells.size(), std::vector<std::int64_t>(j + 1, 0));
  est.aggregate.assign(j + 1, 0);

  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> here(j + 1);
  std::size_t taken = 0;
  while (taken < samples) {
    const Vector xi = gaussian_sample(rng, d);
    bool exceptional = false;
    for (std::size_t k = 0; k <= j && !exceptional; ++k) {
      exceptional = level ? in_exceptional_level(an, k, j, xi).member : in_exceptional(an, k, xi).member;
    }
    if (exceptional) {
      ++est.resampled;
      continue;
    }
    std::fill(here.begin(), here.end(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const std::size_t k = cells[c]->project(xi).k;
      ++est.counts[c][k];
      ++here[k];
    }
    for (std::size_t k = 0; k <= j; ++k) est.aggregate[k] += here[k];
    if (here != a) ++est.aggregate_mismatches;
    ++taken;
  }
  return est;
}

std::vector<double> orthant_intrinsic(std::size_t d) {
  std::vector<double> out(d + 1);
  double binom = 1.0;
  for (std::size_t k = 0; k <= d; ++k) {
    out[k] = std::ldexp(binom, -static_cast<int>(d));
    binom = binom * static_cast<double>(d - k) / static_cast<double>(k + 1);
  }
  return out;
}

Report verify_klivans_swartz(const Analysis& an, const KlivansSwartzOptions& options) {
  return verify_klivans_swartz(an, estimate_intrinsic_volumes(an, options.samples, options.seed, options.level),
                               options);
}

Report verify_klivans_swartz(const Analysis& an, const IntrinsicEstimate& est, const KlivansSwartzOptions& options) {
  const std::size_t j = est.level;
  const auto a = options.level ? an.level_a(j) : an.a();
  Report r{"intrinsic volumes (N=" + std::to_string(est.samples) + ", seed=" + std::to_string(est.seed) +
               ", level=" + std::to_string(j) + ")",
           {}};
  r.add("per-sample aggregate = a", est.aggregate_mismatches == 0,
        std::to_string(est.aggregate_mismatches) + " mismatching samples, " + std::to_string(est.resampled) +
            " resampled");
  for (std::size_t k = 0; k <= j; ++k) {
    const auto want = a[k] * static_cast<std::int64_t>(est.samples);
    r.add("k=" + std::to_string(k) + " sum of estimates = a", est.aggregate[k] == want,
          std::to_string(est.aggregate[k]) + "/" + std::to_string(est.samples) + " vs " + std::to_string(a[k]));
  }
  if (options.per_cell_reference) {
    const auto& ref = *options.per_cell_reference;
    if (ref.size() != j + 1) throw BadParams("reference has the wrong length");
    for (std::size_t c = 0; c < est.cells.size(); ++c) {
      for (std::size_t k = 0; k <= j; ++k) {
        const double diff = std::abs(est.nu(c, k) - ref[k]);
        const double band = options.z * est.std_error(c, k);
        std::ostringstream os;
        os << "nu=" << est.nu(c, k) << " ref=" << ref[k] << " |diff|=" << diff << " band=" << band;
        r.add("cell " + est.cells[c].str() + " k=" + std::to_string(k) + " within band", diff <= band, os.str());
      }
    }
  }
  return r;
}

}  // namespace hyparr

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hyparr/verify.hpp"

namespace hyparr {

// Standard Gaussian vector with every coordinate rounded to a multiple of
// 2^-53, so all later geometry is exact.
Vector gaussian_sample(std::mt19937_64& rng, std::size_t d);

struct IntrinsicEstimate {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t level = 0;               // d for chambers, j for R_j faces
  std::vector<SignVector> cells;
  std::vector<std::vector<std::int64_t>> counts;  // counts[cell][k]
  std::vector<std::int64_t> aggregate;            // sum over cells
  std::size_t resampled = 0;           // exceptional draws that were replaced
  std::size_t aggregate_mismatches = 0;  // samples whose per-sample sum differs from a

  double nu(std::size_t cell, std::size_t k) const;
  double std_error(std::size_t cell, std::size_t k) const;
};

// Requires a linear arrangement (throws NotLinear) and N >= 1 (BadParams).
// With `level`, the cells are the faces in R_j and the Analysis must have
// been built with levels.
IntrinsicEstimate estimate_intrinsic_volumes(const Analysis& an, std::size_t samples, std::uint64_t seed,
                                             std::optional<std::size_t> level = std::nullopt);

// binom(d, k) / 2^d for every k.
std::vector<double> orthant_intrinsic(std::size_t d);

struct KlivansSwartzOptions {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  std::optional<std::size_t> level;
  double z = 4.0;
  // Expected per-cell values, when every cell has the same ones.
  std::optional<std::vector<double>> per_cell_reference;
};

// Per-sample aggregate exactness, exact aggregate of the estimates, and the
// z * SE band for each cell against the reference when one is given.
Report verify_klivans_swartz(const Analysis& an, const KlivansSwartzOptions& options);
Report verify_klivans_swartz(const Analysis& an, const IntrinsicEstimate& est, const KlivansSwartzOptions& options);

}  // namespace hyparr

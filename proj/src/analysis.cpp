#include "hyparr/analysis.hpp"

#include <algorithm>
#include <map>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

bool is_subset(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Matrix normals_of(const Arrangement& a, const Flat& f) {
  Matrix m;
  for (auto i : f.containing) m.push_back(a[i].normal);
  return m;
}

// base + span(first rows, second rows).
AffineSubspace span_piece(const Vector& base, const Matrix& first, const Matrix& second) {
  Matrix dirs = first;
  dirs.insert(dirs.end(), second.begin(), second.end());
  return AffineSubspace(base, dirs);
}

}  // namespace

Analysis::Analysis(Arrangement a, AnalysisOptions options)
    : arr_(std::make_unique<const Arrangement>(std::move(a))) {
  const Arrangement& arr = *arr_;
  const std::size_t d = arr.dim();
  chambers_ = enumerate_chambers(arr, options.limits);
  poset_ = std::make_unique<const IntersectionPoset>(arr);
  charpoly_ = char_poly_moebius(*poset_);
  a_ = charpoly_.abs();

  std::map<SignVector, Face> all;
  projectors_.reserve(chambers_.size());
  for (const auto& c : chambers_) {
    projectors_.emplace_back(arr, as_face(c, d));
    for (const auto& f : projectors_.back().faces()) all.emplace(f.signs, f);
  }
  for (auto& [s, f] : all) faces_.push_back(std::move(f));

  const IntersectionPoset& p = *poset_;
  lower_.assign(d + 1, {});
  upper_.assign(d + 1, {});
  for (std::size_t k = 0; k <= d; ++k) {
    for (auto m : p.of_dim(k)) {
      const Matrix nm = normals_of(arr, p[m]);
      if (k > 0) {
        for (auto lo : p.of_dim(k - 1)) {
          if (!is_subset(p[m].containing, p[lo].containing)) continue;
          lower_[k].push_back({span_piece(p[lo].point(), p[lo].directions(), nm), m, lo, true});
        }
      }
      if (k < d) {
        for (auto hi : p.of_dim(k + 1)) {
          if (!is_subset(p[hi].containing, p[m].containing)) continue;
          upper_[k].push_back({span_piece(p[m].point(), normals_of(arr, p[hi]), p[m].directions()), m, hi, false});
        }
      }
    }
  }

  if (options.levels) {
    level_polys_.reserve(d + 1);
    rj_.assign(d + 1, {});
    level_projectors_.assign(d + 1, {});
    for (std::size_t j = 0; j <= d; ++j) level_polys_.push_back(char_poly_level(arr, p, j));
    for (const auto& f : faces_) rj_[f.dim].push_back(f);
    for (std::size_t j = 0; j <= d; ++j) {
      for (const auto& cell : rj_[j]) {
        std::vector<Face> sub;
        for (const auto& f : faces_) {
          if (f.dim <= j && f.signs.conforms_to(cell.signs)) sub.push_back(f);
        }
        level_projectors_[j].emplace_back(arr, cell, std::move(sub));
      }
    }
  }
}

void Analysis::check_level(std::size_t j) const {
  if (level_polys_.empty()) throw BadParams("levels were not prepared for this arrangement");
  if (j > dim()) throw BadParams("level " + std::to_string(j) + " exceeds ambient dimension");
}

const CharPoly& Analysis::level_poly(std::size_t j) const {
  check_level(j);
  return level_polys_[j];
}

std::vector<std::int64_t> Analysis::level_a(std::size_t j) const { return level_poly(j).abs(); }

const std::vector<Face>& Analysis::Rj(std::size_t j) const {
  check_level(j);
  return rj_[j];
}

const CellProjector& Analysis::level_projector(std::size_t j, std::size_t face) const {
  check_level(j);
  return level_projectors_[j].at(face);
}

}  // namespace hyparr

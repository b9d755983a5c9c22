#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "hyparr/cones.hpp"
#include "hyparr/poset.hpp"

namespace hyparr {

// One affine subspace of an exceptional set, with the pair of flats that
// produced it. `lower` pieces come from a flat M and a flat M' one dimension
// below inside it (M' + the orthogonal complement of M); upper pieces from M
// and a flat M'' one dimension above containing it (M + the orthogonal
// complement of M'').
struct ExceptionalPiece {
  AffineSubspace space;
  std::size_t flat = 0;   // poset index of M
  std::size_t other = 0;  // poset index of M' or M''
  bool lower = true;
};

struct AnalysisOptions {
  Limits limits;
  // Also prepare R_j faces and level polynomials for every j.
  bool levels = false;
};

// Everything about an arrangement that does not depend on a query point,
// computed once up front. Immutable afterwards and safe to share.
class Analysis {
 public:
  explicit Analysis(Arrangement a, AnalysisOptions options = {});

  const Arrangement& arrangement() const { return *arr_; }
  std::size_t dim() const { return arr_->dim(); }
  const IntersectionPoset& poset() const { return *poset_; }
  const CharPoly& charpoly() const { return charpoly_; }
  const std::vector<std::int64_t>& a() const { return a_; }

  const std::vector<Chamber>& chambers() const { return chambers_; }
  const CellProjector& projector(std::size_t chamber) const { return projectors_[chamber]; }
  // Every face of every chamber, deduplicated, sorted by sign vector.
  const std::vector<Face>& faces() const { return faces_; }

  bool has_levels() const { return !level_polys_.empty(); }
  // Throws BadParams when levels were not requested or j > d.
  const CharPoly& level_poly(std::size_t j) const;
  std::vector<std::int64_t> level_a(std::size_t j) const;
  const std::vector<Face>& Rj(std::size_t j) const;
  const CellProjector& level_projector(std::size_t j, std::size_t face) const;

  // Pieces of E_k; the level-j set E_kj uses the lower pieces and, when
  // k < j, the upper pieces too.
  const std::vector<ExceptionalPiece>& lower_pieces(std::size_t k) const { return lower_[k]; }
  const std::vector<ExceptionalPiece>& upper_pieces(std::size_t k) const { return upper_[k]; }

 private:
  void check_level(std::size_t j) const;

  std::unique_ptr<const Arrangement> arr_;
  std::unique_ptr<const IntersectionPoset> poset_;
  CharPoly charpoly_;
  std::vector<std::int64_t> a_;
  std::vector<Chamber> chambers_;
  std::vector<CellProjector> projectors_;
  std::vector<Face> faces_;
  std::vector<std::vector<ExceptionalPiece>> lower_, upper_;
  std::vector<CharPoly> level_polys_;
  std::vector<std::vector<Face>> rj_;
  std::vector<std::vector<CellProjector>> level_projectors_;
};

}  // namespace hyparr

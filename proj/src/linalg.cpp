#include "hyparr/linalg.hpp"

#include <utility>

#include "hyparr/error.hpp"

namespace hyparr {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vector add(std::span<const Rational> a, std::span<const Rational> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector sub(std::span<const Rational> a, std::span<const Rational> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Rational& s, std::span<const Rational> a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector apply(const Matrix& m, std::span<const Rational> x) {
  Vector out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r) out[r] = dot(m[r], x);
  return out;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  }
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t b_cols) {
  Matrix out(a.size(), Vector(b_cols));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < b_cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

ReducedRowEchelon rref(Matrix m, std::size_t cols) {
  ReducedRowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) {
        if (sgn(m[row][c]) != 0) m[r][c] -= f * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  const auto red = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < red.rows.size(); ++r) v[red.pivots[r]] = -red.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b, std::size_t cols) {
  Matrix aug = m;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto red = rref(std::move(aug), cols + 1);
  Vector x(cols);
  for (std::size_t r = 0; r < red.rows.size(); ++r) {
    if (red.pivots[r] == cols) return std::nullopt;
    x[red.pivots[r]] = red.rows[r][cols];
  }
  return x;
}

std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols) {
  std::vector<std::size_t> chosen;
  Matrix acc;
  for (std::size_t r = 0; r < m.size(); ++r) {
    acc.push_back(m[r]);
    if (rank(acc, cols) == acc.size()) {
      chosen.push_back(r);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.size();
  Matrix aug = m;
  for (std::size_t r = 0; r < n; ++r) {
    aug[r].resize(2 * n);
    aug[r][n + r] = 1;
  }
  auto red = rref(std::move(aug), n);
  if (red.pivots.size() != n) throw Inconsistent("inverse of a singular matrix");
  Matrix inv(n);
  for (std::size_t r = 0; r < n; ++r) inv[r].assign(red.rows[r].begin() + n, red.rows[r].end());
  return inv;
}

Matrix orthogonal_basis(const Matrix& rows, std::size_t cols) {
  Matrix basis;
  std::vector<Rational> sq;
  for (const auto& v : rows) {
    Vector w = v;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Rational c = dot(w, basis[i]) / sq[i];
      if (sgn(c) == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) w[k] -= c * basis[i][k];
    }
    if (is_zero(w)) continue;
    sq.push_back(dot(w, w));
    basis.push_back(std::move(w));
  }
  return basis;
}

AffineSubspace::AffineSubspace(Vector point, const Matrix& directions)
    : point_(std::move(point)), annihilator_(nullspace(directions, point_.size())) {}

bool AffineSubspace::contains(std::span<const Rational> v) const {
  for (const auto& a : annihilator_) {
    Rational s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(a[i]) != 0) s += a[i] * (v[i] - point_[i]);
    }
    if (sgn(s) != 0) return false;
  }
  return true;
}

}  // namespace hyparr

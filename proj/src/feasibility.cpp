#include "hyparr/feasibility.hpp"

#include "hyparr/linalg.hpp"

namespace hyparr {

namespace {

// Dense simplex tableau over nonnegative variables. Row r reads
// sum_j T[r][j] w_j = rhs[r] with basis[r] the basic column of the row.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows, Vector(cols)), rhs_(rows), basis_(rows), banned_(cols, false) {}

  Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Rational& rhs(std::size_t r) { return rhs_[r]; }
  std::size_t& basis(std::size_t r) { return basis_[r]; }
  void ban(std::size_t c) { banned_[c] = true; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return banned_.size(); }

  // Maximizes sum_j cost[j] w_j from the current basic feasible solution.
  // Returns false if unbounded (never happens for the bounded problems built
  // below, but kept honest).
  bool maximize(const Vector& cost, Rational& value) {
    Vector z(cols());
    value = 0;
    for (std::size_t j = 0; j < cols(); ++j) z[j] = cost[j];
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      value += cb * rhs_[r];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(t_[r][j]) != 0) z[j] -= cb * t_[r][j];
      }
    }
    while (true) {
      std::size_t enter = cols();
      for (std::size_t j = 0; j < cols(); ++j) {
        if (!banned_[j] && sgn(z[j]) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (sgn(t_[r][enter]) <= 0) continue;
        Rational ratio = rhs_[r] / t_[r][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
      const Rational f = z[enter];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(t_[leave][j]) != 0) z[j] -= f * t_[leave][j];
      }
      value += f * rhs_[leave];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_[row][col];
    for (auto& x : t_[row]) {
      if (sgn(x) != 0) x *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row || sgn(t_[r][col]) == 0) continue;
      const Rational f = t_[r][col];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(t_[row][j]) != 0) t_[r][j] -= f * t_[row][j];
      }
      rhs_[r] -= f * rhs_[row];
    }
    basis_[row] = col;
  }

  Rational value_of(std::size_t col) const {
    for (std::size_t r = 0; r < rows(); ++r) {
      if (basis_[r] == col) return rhs_[r];
    }
    return 0;
  }

 private:
  Matrix t_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> banned_;
};

struct Inequality {
  Vector coeffs;
  Rational rhs;
  bool strict;
};

struct InequalityResult {
  Feasibility status;
  Vector u;
};

// Solves sum coeffs u (<= or <) rhs over free u in R^n. Each row has a
// nonzero coefficient vector.
InequalityResult solve_inequalities(std::size_t n, const std::vector<Inequality>& rows) {
  bool any_strict = false;
  for (const auto& r : rows) any_strict = any_strict || r.strict;

  // Columns: u+ (n), u- (n), [t], one slack per row, [slack of t <= 1], artificials.
  const std::size_t t_col = 2 * n;
  const std::size_t slack0 = 2 * n + (any_strict ? 1 : 0);
  const std::size_t total_rows = rows.size() + (any_strict ? 1 : 0);
  std::size_t n_art = 0;
  for (const auto& r : rows) n_art += sgn(r.rhs) < 0 ? 1 : 0;
  const std::size_t art0 = slack0 + total_rows;
  const std::size_t cols = art0 + n_art;

  Tableau tab(total_rows, cols);
  std::size_t art = art0;
  std::vector<std::size_t> art_rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const int flip = sgn(row.rhs) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(row.coeffs[j]) == 0) continue;
      tab.at(r, j) = flip * row.coeffs[j];
      tab.at(r, n + j) = -flip * row.coeffs[j];
    }
    if (row.strict) tab.at(r, t_col) = flip;
    tab.at(r, slack0 + r) = flip;
    tab.rhs(r) = flip * row.rhs;
    if (flip > 0) {
      tab.basis(r) = slack0 + r;
    } else {
      tab.at(r, art) = 1;
      tab.basis(r) = art++;
      art_rows.push_back(r);
    }
  }
  if (any_strict) {
    const std::size_t r = rows.size();
    tab.at(r, t_col) = 1;
    tab.at(r, slack0 + r) = 1;
    tab.rhs(r) = 1;
    tab.basis(r) = slack0 + r;
  }

  Rational value;
  if (n_art > 0) {
    Vector cost(cols);
    for (std::size_t c = art0; c < cols; ++c) cost[c] = -1;
    tab.maximize(cost, value);
    if (sgn(value) < 0) return {Feasibility::Infeasible, {}};
    for (std::size_t c = art0; c < cols; ++c) tab.ban(c);
    // Drive zero-level artificials out of the basis where possible; rows
    // where that fails are redundant and stay inert.
    for (std::size_t r = 0; r < tab.rows(); ++r) {
      if (tab.basis(r) < art0) continue;
      for (std::size_t c = 0; c < art0; ++c) {
        if (sgn(tab.at(r, c)) != 0) {
          tab.pivot(r, c);
          break;
        }
      }
    }
  }
  Feasibility status = Feasibility::Feasible;
  if (any_strict) {
    Vector cost(cols);
    cost[t_col] = 1;
    tab.maximize(cost, value);
    if (sgn(value) <= 0) status = Feasibility::OnlyRelaxed;
  }
  Vector u(n);
  for (std::size_t j = 0; j < n; ++j) u[j] = tab.value_of(j) - tab.value_of(n + j);
  return {status, std::move(u)};
}

}  // namespace

bool satisfies(std::span<const LinearConstraint> constraints, std::span<const Rational> x) {
  for (const auto& c : constraints) {
    const int s = sgn(dot(c.coeffs, x) - c.rhs);
    switch (c.rel) {
      case Relation::LessEqual:
        if (s > 0) return false;
        break;
      case Relation::Less:
        if (s >= 0) return false;
        break;
      case Relation::Equal:
        if (s != 0) return false;
        break;
    }
  }
  return true;
}

std::optional<Vector> feasible(std::size_t dim, std::span<const LinearConstraint> constraints) {
  auto r = analyze_system(dim, constraints);
  if (r.status != Feasibility::Feasible) return std::nullopt;
  return std::move(r.witness);
}

FeasibilityResult analyze_system(std::size_t dim, std::span<const LinearConstraint> constraints) {
  Matrix eq;
  Vector eq_rhs;
  for (const auto& c : constraints) {
    if (c.rel == Relation::Equal) {
      eq.push_back(c.coeffs);
      eq_rhs.push_back(c.rhs);
    }
  }
  Vector base(dim);
  Matrix dirs;  // x = base + sum_k u_k dirs[k]
  if (eq.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      Vector e(dim);
      e[i] = 1;
      dirs.push_back(std::move(e));
    }
  } else {
    auto p = solve(eq, eq_rhs, dim);
    if (!p) return {};
    base = std::move(*p);
    dirs = nullspace(eq, dim);
  }

  const std::size_t n = dirs.size();
  Feasibility status = Feasibility::Feasible;
  std::vector<Inequality> rows;
  for (const auto& c : constraints) {
    if (c.rel == Relation::Equal) continue;
    Inequality row{Vector(n), c.rhs - dot(c.coeffs, base), c.rel == Relation::Less};
    bool nonzero = false;
    for (std::size_t k = 0; k < n; ++k) {
      row.coeffs[k] = dot(c.coeffs, dirs[k]);
      nonzero = nonzero || sgn(row.coeffs[k]) != 0;
    }
    if (!nonzero) {
      const int s = sgn(row.rhs);
      if (s < 0) return {};
      if (s == 0 && row.strict) status = Feasibility::OnlyRelaxed;
      continue;
    }
    rows.push_back(std::move(row));
  }

  Vector u(n);
  if (!rows.empty()) {
    auto sol = solve_inequalities(n, rows);
    if (sol.status == Feasibility::Infeasible) return {};
    if (sol.status == Feasibility::OnlyRelaxed) status = Feasibility::OnlyRelaxed;
    u = std::move(sol.u);
  }
  Vector x = base;
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(u[k]) == 0) continue;
    for (std::size_t i = 0; i < dim; ++i) x[i] += u[k] * dirs[k][i];
  }
  return {status, std::move(x)};
}

}  // namespace hyparr

#include "hyparr/cones.hpp"

#include <algorithm>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

void check_face(const Arrangement& a, const Face& p, const Face& f) {
  if (p.signs.size() != a.size() || f.signs.size() != a.size()) {
    throw DimensionMismatch("sign vector length differs from arrangement size");
  }
  if (!f.signs.conforms_to(p.signs)) {
    throw FaceNotOfChamber("face " + f.signs.str() + " is not a face of " + p.signs.str());
  }
}

void check_point(const Arrangement& a, std::span<const Rational> x) {
  if (x.size() != a.dim()) throw DimensionMismatch("point has wrong dimension");
}

// v = sum lambda_i g_i + sum alpha_j l_j, lambda >= 0 (or > 0 when strict).
bool combination_exists(const Cone& c, std::span<const Rational> v, bool strict) {
  const std::size_t p = c.generators.size();
  const std::size_t l = c.lineality.size();
  const std::size_t d = c.ambient_dim;
  if (v.size() != d) throw DimensionMismatch("vector has wrong dimension for cone");
  std::vector<LinearConstraint> cs;
  cs.reserve(d + p);
  for (std::size_t k = 0; k < d; ++k) {
    LinearConstraint row{Vector(p + l), v[k], Relation::Equal};
    for (std::size_t i = 0; i < p; ++i) row.coeffs[i] = c.generators[i][k];
    for (std::size_t j = 0; j < l; ++j) row.coeffs[p + j] = c.lineality[j][k];
    cs.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < p; ++i) {
    LinearConstraint row{Vector(p + l), 0, strict ? Relation::Less : Relation::LessEqual};
    row.coeffs[i] = -1;
    cs.push_back(std::move(row));
  }
  return feasible(p + l, cs).has_value();
}

Cone make_normal_cone(const Arrangement& a, const Face& p, const Face& f) {
  check_face(a, p, f);
  Cone c;
  c.ambient_dim = a.dim();
  c.has_generator_form = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.signs[i] != 0) continue;
    if (p.signs[i] == 0) {
      c.lineality.push_back(a[i].normal);
    } else {
      c.generators.push_back(scale(Rational(-p.signs[i]), a[i].normal));
    }
  }
  return c;
}

}  // namespace

Cone dual(const Cone& c) {
  Cone out;
  out.ambient_dim = c.ambient_dim;
  if (c.has_generator_form) {
    out.has_halfspace_form = true;
    out.equalities = c.lineality;
    out.halfspaces = c.generators;
  }
  if (c.has_halfspace_form) {
    out.has_generator_form = true;
    out.lineality = c.equalities;
    out.generators = c.halfspaces;
  }
  return out;
}

bool in_cone(const Cone& c, std::span<const Rational> v) {
  if (!c.has_generator_form) throw BadParams("cone has no generator form");
  return combination_exists(c, v, false);
}

bool in_cone_relint(const Cone& c, std::span<const Rational> v) {
  if (!c.has_generator_form) throw BadParams("cone has no generator form");
  return combination_exists(c, v, true);
}

bool in_halfspaces(const Cone& c, std::span<const Rational> v) {
  if (!c.has_halfspace_form) throw BadParams("cone has no halfspace form");
  if (v.size() != c.ambient_dim) throw DimensionMismatch("vector has wrong dimension for cone");
  for (const auto& e : c.equalities) {
    if (sgn(dot(e, v)) != 0) return false;
  }
  for (const auto& h : c.halfspaces) {
    if (sgn(dot(h, v)) > 0) return false;
  }
  return true;
}

Cone tangent_cone(const Arrangement& a, const Face& p, const Face& f) { return dual(make_normal_cone(a, p, f)); }

Cone tangent_cone(const Arrangement& a, const Chamber& p, const Face& f) {
  return tangent_cone(a, as_face(p, a.dim()), f);
}

Cone normal_cone(const Arrangement& a, const Face& p, const Face& f) { return make_normal_cone(a, p, f); }

Cone normal_cone(const Arrangement& a, const Chamber& p, const Face& f) {
  return normal_cone(a, as_face(p, a.dim()), f);
}

ConeMembership::ConeMembership(const Cone& c) : cone_(c) {
  if (!c.has_generator_form) throw BadParams("cone has no generator form");
  const std::size_t d = c.ambient_dim;
  lin_basis_ = orthogonal_basis(c.lineality, d);
  for (const auto& b : lin_basis_) lin_sq_.push_back(dot(b, b));

  Matrix projected;
  for (const auto& g : c.generators) {
    Vector p = project_out_lineality(g);
    if (!is_zero(p)) projected.push_back(std::move(p));
  }
  // Drop generators that are nonnegative combinations of the others.
  std::vector<bool> keep(projected.size(), true);
  for (std::size_t i = 0; i < projected.size(); ++i) {
    Cone rest;
    rest.ambient_dim = d;
    rest.has_generator_form = true;
    for (std::size_t j = 0; j < projected.size(); ++j) {
      if (j != i && keep[j]) rest.generators.push_back(projected[j]);
    }
    if (combination_exists(rest, projected[i], false)) keep[i] = false;
  }
  for (std::size_t i = 0; i < projected.size(); ++i) {
    if (keep[i]) gens_.push_back(std::move(projected[i]));
  }

  simplicial_ = rank(gens_, d) == gens_.size();
  if (simplicial_ && !gens_.empty()) {
    const Matrix gram = multiply(gens_, transpose(gens_, d), gens_.size());
    coef_map_ = multiply(inverse(gram), gens_, d);
  }
}

Vector ConeMembership::project_out_lineality(std::span<const Rational> v) const {
  Vector w(v.begin(), v.end());
  for (std::size_t k = 0; k < lin_basis_.size(); ++k) {
    const Rational f = dot(lin_basis_[k], w) / lin_sq_[k];
    if (sgn(f) == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= f * lin_basis_[k][i];
  }
  return w;
}

bool ConeMembership::contains(std::span<const Rational> v) const {
  if (v.size() != cone_.ambient_dim) throw DimensionMismatch("vector has wrong dimension for cone");
  const Vector w = project_out_lineality(v);
  if (gens_.empty()) return is_zero(w);
  if (!simplicial_) {
    Cone reduced;
    reduced.ambient_dim = cone_.ambient_dim;
    reduced.has_generator_form = true;
    reduced.generators = gens_;
    return combination_exists(reduced, w, false);
  }
  const Vector mu = hyparr::apply(coef_map_, w);
  for (const auto& m : mu) {
    if (sgn(m) < 0) return false;
  }
  // mu is the least-squares fit; w is in the cone only if the fit is exact.
  Vector back(w.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (sgn(mu[i]) == 0) continue;
    for (std::size_t k = 0; k < w.size(); ++k) back[k] += mu[i] * gens_[i][k];
  }
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (cmp(back[k], w[k]) != 0) return false;
  }
  return true;
}

CellProjector::CellProjector(const Arrangement& a, Face cell) : CellProjector(a, cell, faces_of(a, cell)) {}

CellProjector::CellProjector(const Arrangement& a, Face cell, std::vector<Face> faces_of_cell)
    : arr_(&a), cell_(std::move(cell)), faces_(std::move(faces_of_cell)) {
  std::sort(faces_.begin(), faces_.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.signs < y.signs;
  });
  const std::size_t d = a.dim();
  prepared_.reserve(faces_.size());
  for (const auto& f : faces_) {
    PreparedFace pf;
    Matrix zero_rows;
    Vector zero_rhs;
    for (auto i : f.zero_set()) {
      zero_rows.push_back(a[i].normal);
      zero_rhs.push_back(a[i].offset);
    }
    for (auto i : independent_rows(zero_rows, d)) {
      pf.rows.push_back(zero_rows[i]);
      pf.rhs.push_back(zero_rhs[i]);
    }
    const std::size_t r = pf.rows.size();
    if (r > 0) {
      const Matrix gram = multiply(pf.rows, transpose(pf.rows, d), r);
      pf.lift = multiply(transpose(pf.rows, d), inverse(gram), r);
    }
    pf.normal_cone = make_normal_cone(a, cell_, f);
    pf.normal = ConeMembership(pf.normal_cone);
    prepared_.push_back(std::move(pf));
  }
}

Vector CellProjector::project_to_hull(const PreparedFace& pf, std::span<const Rational> x) const {
  Vector pi(x.begin(), x.end());
  if (pf.rows.empty()) return pi;
  Vector res(pf.rows.size());
  for (std::size_t k = 0; k < pf.rows.size(); ++k) res[k] = dot(pf.rows[k], x) - pf.rhs[k];
  for (std::size_t i = 0; i < pi.size(); ++i) pi[i] -= dot(pf.lift[i], res);
  return pi;
}

bool CellProjector::sign_pattern_matches(const Face& f, std::span<const Rational> point, bool closed) const {
  const Arrangement& a = *arr_;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int want = f.signs[i];
    if (want == 0) continue;  // holds on aff F by construction
    const int s = sgn(a[i].residual(point));
    if (s == want) continue;
    if (closed && s == 0) continue;
    return false;
  }
  return true;
}

ProjectionResult CellProjector::project(std::span<const Rational> x) const {
  if (x.size() != arr_->dim()) throw DimensionMismatch("point has wrong dimension");
  std::optional<std::size_t> found;
  Vector point;
  for (std::size_t idx = 0; idx < faces_.size(); ++idx) {
    Vector pi = project_to_hull(prepared_[idx], x);
    if (!sign_pattern_matches(faces_[idx], pi, false)) continue;
    if (!prepared_[idx].normal.contains(sub(x, pi))) continue;
    if (found) throw Inconsistent("two faces accept the metric projection of " + format_point(x));
    found = idx;
    point = std::move(pi);
  }
  if (!found) throw Inconsistent("no face accepts the metric projection of " + format_point(x));
  return ProjectionResult{std::move(point), faces_[*found], faces_[*found].dim};
}

bool CellProjector::indicator(std::size_t face_index, std::span<const Rational> x, int sign) const {
  if (x.size() != arr_->dim()) throw DimensionMismatch("point has wrong dimension");
  const Vector pi = project_to_hull(prepared_[face_index], x);
  if (!sign_pattern_matches(faces_[face_index], pi, true)) return false;
  Vector r = sub(x, pi);
  if (sign < 0) r = scale(Rational(-1), r);
  return prepared_[face_index].normal.contains(r);
}

CellProjector::Evaluation CellProjector::evaluate(std::span<const Rational> x, int sign) const {
  if (x.size() != arr_->dim()) throw DimensionMismatch("point has wrong dimension");
  Evaluation ev;
  ev.closed_counts.assign(arr_->dim() + 1, 0);
  std::size_t accepted = 0;
  for (std::size_t idx = 0; idx < faces_.size(); ++idx) {
    Vector pi = project_to_hull(prepared_[idx], x);
    if (!sign_pattern_matches(faces_[idx], pi, true)) continue;
    Vector r = sub(x, pi);
    const bool relint = sign_pattern_matches(faces_[idx], pi, false);
    const bool in_plus = prepared_[idx].normal.contains(r);
    if (relint && in_plus) {
      ++accepted;
      ev.accepting_face = idx;
      ev.point = pi;
    }
    const bool counted = sign > 0 ? in_plus : prepared_[idx].normal.contains(scale(Rational(-1), r));
    if (counted) ++ev.closed_counts[faces_[idx].dim];
  }
  if (accepted != 1) {
    throw Inconsistent(std::to_string(accepted) + " faces accept the metric projection of " + format_point(x));
  }
  return ev;
}

ProjectionResult metric_project(const Arrangement& a, const Chamber& p, std::span<const Rational> x) {
  check_point(a, x);
  return CellProjector(a, as_face(p, a.dim())).project(x);
}

bool indicator_F_plus_N(const Arrangement& a, const Chamber& p, const Face& f, std::span<const Rational> x, int sign) {
  check_point(a, x);
  const Cone n = normal_cone(a, p, f);
  // Orthogonal split of x against aff F, computed directly from the face's
  // zero set (no prepared data).
  Matrix rows;
  Vector rhs;
  for (auto i : f.zero_set()) {
    rows.push_back(a[i].normal);
    rhs.push_back(a[i].offset);
  }
  Vector pi(x.begin(), x.end());
  if (!rows.empty()) {
    // pi = x - R^T lambda with R pi = rhs; solve (R R^T) lambda = R x - rhs.
    const Matrix gram = multiply(rows, transpose(rows, a.dim()), rows.size());
    Vector res(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k) res[k] = dot(rows[k], x) - rhs[k];
    auto lambda = solve(gram, res, rows.size());
    if (!lambda) throw Inconsistent("face zero set is inconsistent");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t i = 0; i < pi.size(); ++i) pi[i] -= (*lambda)[k] * rows[k][i];
    }
  }
  if (!in_closed_cell(a, f.signs, pi)) return false;
  Vector r = sub(x, pi);
  if (sign < 0) r = scale(Rational(-1), r);
  return in_cone(n, r);
}

Rational distance_sq(std::span<const Rational> x, std::span<const Rational> y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Rational t = x[i] - y[i];
    s += t * t;
  }
  return s;
}

}  // namespace hyparr

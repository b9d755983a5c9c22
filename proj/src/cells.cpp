#include "hyparr/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

// signs * (<y, z> - c) > 0 rewritten as -signs <y, z> < -signs c.
LinearConstraint side_constraint(const Hyperplane& h, int s, bool closed) {
  if (s == 0) return {h.normal, h.offset, Relation::Equal};
  LinearConstraint c{scale(Rational(-s), h.normal), Rational(-s) * h.offset, closed ? Relation::LessEqual : Relation::Less};
  return c;
}

std::size_t face_dim(const Arrangement& a, const SignVector& signs) {
  Matrix m;
  for (auto i : signs.zero_set()) m.push_back(a[i].normal);
  return a.dim() - rank(m, a.dim());
}

}  // namespace

const char* to_string(ChamberKind k) {
  switch (k) {
    case ChamberKind::Bounded: return "bounded";
    case ChamberKind::UnboundedLineFree: return "unbounded_line_free";
    case ChamberKind::HasLine: return "has_line";
  }
  return "?";
}

Face as_face(const Chamber& c, std::size_t dim) { return Face{c.signs, dim, c.witness}; }

std::vector<LinearConstraint> cell_constraints(const Arrangement& a, const SignVector& signs, bool closed) {
  std::vector<LinearConstraint> cs;
  cs.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) cs.push_back(side_constraint(a[i], signs[i], closed));
  return cs;
}

bool in_closed_cell(const Arrangement& a, const SignVector& signs, std::span<const Rational> x) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int s = sgn(a[i].residual(x));
    if (s != 0 && s != signs[i]) return false;
    if (signs[i] == 0 && s != 0) return false;
  }
  return true;
}

std::vector<Chamber> enumerate_chambers(const Arrangement& a, const Limits& limits) {
  check_size(a, limits, "chamber enumeration");
  std::vector<Chamber> out;
  std::vector<LinearConstraint> prefix;
  std::vector<std::int8_t> signs;
  // Depth-first over sign prefixes. A prefix whose strict system is
  // infeasible has no feasible extension, so the 2^m sign space is covered
  // without visiting its infeasible part.
  std::function<void(const Vector&)> walk = [&](const Vector& witness) {
    const std::size_t i = signs.size();
    if (i == a.size()) {
      out.push_back(Chamber{SignVector(signs), witness});
      return;
    }
    const int here = sgn(a[i].residual(witness));
    for (int s : {-1, 1}) {
      prefix.push_back(side_constraint(a[i], s, false));
      signs.push_back(static_cast<std::int8_t>(s));
      if (s == here) {
        walk(witness);
      } else if (auto w = feasible(a.dim(), prefix)) {
        walk(*w);
      }
      signs.pop_back();
      prefix.pop_back();
    }
  };
  walk(Vector(a.dim()));
  std::sort(out.begin(), out.end(), [](const Chamber& x, const Chamber& y) { return x.signs < y.signs; });
  return out;
}

std::vector<Face> faces_of(const Arrangement& a, const Face& polyhedron) {
  const SignVector& base = polyhedron.signs;
  if (base.size() != a.size()) throw DimensionMismatch("sign vector length differs from arrangement size");

  // Indices whose hyperplane meets the closed polyhedron; only these can be
  // zeroed in a face.
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (base[i] == 0) continue;
    SignVector probe = base;
    probe.set(i, 0);
    if (analyze_system(a.dim(), cell_constraints(a, probe, true)).status != Feasibility::Infeasible) {
      active.push_back(i);
    }
  }

  std::vector<Face> out;
  SignVector current = base;
  std::function<void(std::size_t)> walk = [&](std::size_t from) {
    const auto r = analyze_system(a.dim(), cell_constraints(a, current, false));
    if (r.status == Feasibility::Infeasible) return;  // no superset of zeros is feasible either
    if (r.status == Feasibility::Feasible) out.push_back(Face{current, face_dim(a, current), *r.witness});
    for (std::size_t k = from; k < active.size(); ++k) {
      const std::size_t i = active[k];
      const int saved = current[i];
      current.set(i, 0);
      walk(k + 1);
      current.set(i, saved);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end(), [](const Face& x, const Face& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return x.signs < y.signs;
  });
  return out;
}

std::vector<Face> faces_of_chamber(const Arrangement& a, const Chamber& p) { return faces_of(a, as_face(p, a.dim())); }

std::vector<std::size_t> face_counts_by_dim(const std::vector<Face>& faces, std::size_t dim) {
  std::vector<std::size_t> counts(dim + 1, 0);
  for (const auto& f : faces) ++counts[f.dim];
  return counts;
}

std::vector<Face> enumerate_Rj(const Arrangement& a, std::size_t j, const Limits& limits) {
  if (j > a.dim()) throw BadParams("face dimension " + std::to_string(j) + " exceeds ambient dimension");
  std::map<SignVector, Face> found;
  for (const auto& c : enumerate_chambers(a, limits)) {
    for (auto& f : faces_of_chamber(a, c)) {
      if (f.dim == j) found.emplace(f.signs, std::move(f));
    }
  }
  std::vector<Face> out;
  out.reserve(found.size());
  for (auto& [s, f] : found) out.push_back(std::move(f));
  return out;
}

bool is_relatively_bounded(const Arrangement& a, const Chamber& p) {
  // Recession cone: {u : -s_i <y_i, u> <= 0}. It avoids the normal span
  // except at 0 iff no u in it makes the sum of the (nonpositive) terms
  // negative.
  std::vector<LinearConstraint> cs;
  Vector total(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Vector g = scale(Rational(-p.signs[i]), a[i].normal);
    for (std::size_t k = 0; k < a.dim(); ++k) total[k] += g[k];
    cs.push_back({std::move(g), 0, Relation::LessEqual});
  }
  cs.push_back({std::move(total), -1, Relation::LessEqual});
  return !feasible(a.dim(), cs).has_value();
}

ChamberKind classify_chamber(const Arrangement& a, const Chamber& p) {
  // Lineality space of the recession cone is the common null space of the normals.
  if (!nullspace(a.normals(), a.dim()).empty()) return ChamberKind::HasLine;
  return is_relatively_bounded(a, p) ? ChamberKind::Bounded : ChamberKind::UnboundedLineFree;
}

}  // namespace hyparr

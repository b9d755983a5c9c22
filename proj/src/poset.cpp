#include "hyparr/poset.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "hyparr/error.hpp"

namespace hyparr {

namespace {

bool contains_subspace(const Hyperplane& h, const AffineSolution& s) {
  if (sgn(h.residual(s.point)) != 0) return false;
  for (const auto& d : s.directions) {
    if (sgn(dot(h.normal, d)) != 0) return false;
  }
  return true;
}

std::vector<std::size_t> containing_set(const Arrangement& a, const AffineSolution& s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (contains_subspace(a[i], s)) out.push_back(i);
  }
  return out;
}

AffineSolution whole_space(std::size_t d) {
  AffineSolution s{Vector(d), {}};
  for (std::size_t i = 0; i < d; ++i) {
    Vector e(d);
    e[i] = 1;
    s.directions.push_back(std::move(e));
  }
  return s;
}

std::int64_t pow_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::optional<AffineSolution> intersect(const AffineSolution& s, const Hyperplane& h) {
  const std::size_t k = s.directions.size();
  Vector w(k);
  std::size_t pivot = k;
  for (std::size_t i = 0; i < k; ++i) {
    w[i] = dot(h.normal, s.directions[i]);
    if (pivot == k && sgn(w[i]) != 0) pivot = i;
  }
  const Rational r = h.offset - dot(h.normal, s.point);
  if (pivot == k) {
    if (sgn(r) != 0) return std::nullopt;
    return s;
  }
  AffineSolution out;
  const auto& dp = s.directions[pivot];
  const Rational step = r / w[pivot];
  out.point = s.point;
  for (std::size_t c = 0; c < out.point.size(); ++c) out.point[c] += step * dp[c];
  for (std::size_t i = 0; i < k; ++i) {
    if (i == pivot) continue;
    Vector v = s.directions[i];
    if (sgn(w[i]) != 0) {
      const Rational f = w[i] / w[pivot];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * dp[c];
    }
    out.directions.push_back(std::move(v));
  }
  return out;
}

bool flat_contains(const Arrangement& a, const Flat& outer, const Flat& inner) {
  for (auto i : outer.containing) {
    if (!contains_subspace(a[i], inner.subspace)) return false;
  }
  return true;
}

IntersectionPoset::IntersectionPoset(const Arrangement& a) : dim_(a.dim()), by_dim_(a.dim() + 1) {
  std::map<std::vector<std::size_t>, Flat> found;
  std::deque<std::vector<std::size_t>> queue;
  found.emplace(std::vector<std::size_t>{}, Flat{whole_space(dim_), {}});
  queue.push_back({});
  while (!queue.empty()) {
    const Flat current = found.at(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::binary_search(current.containing.begin(), current.containing.end(), i)) continue;
      auto next = intersect(current.subspace, a[i]);
      if (!next) continue;
      auto key = containing_set(a, *next);
      if (found.count(key)) continue;
      found.emplace(key, Flat{std::move(*next), key});
      queue.push_back(std::move(key));
    }
  }
  for (auto& [key, flat] : found) flats_.push_back(std::move(flat));
  std::stable_sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
    if (x.dim() != y.dim()) return x.dim() > y.dim();
    return x.containing < y.containing;
  });
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    by_dim_[flats_[i].dim()].push_back(i);
    index_.emplace(flats_[i].containing, i);
  }
}

std::optional<std::size_t> IntersectionPoset::find(const std::vector<std::size_t>& containing) const {
  auto it = index_.find(containing);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t IntersectionPoset::locate(const Arrangement& a, const Flat& f) const {
  if (f.dim() <= dim_ && f.point().size() == dim_) {
    for (auto i : by_dim_[f.dim()]) {
      // f's `containing` list is not trusted; the reverse inclusion uses
      // f's own affine description.
      if (flat_contains(a, flats_[i], f)) {
        const AffineSubspace mine(f.point(), f.directions());
        bool same = mine.contains(flats_[i].point());
        for (const auto& d : flats_[i].directions()) {
          same = same && mine.contains(add(f.point(), d));
        }
        if (same) return i;
      }
    }
  }
  throw FlatNotInPoset("subspace of dimension " + std::to_string(f.dim()) + " is not a flat of the arrangement");
}

std::vector<std::int64_t> CharPoly::abs() const {
  const std::size_t n = degree_bound();
  std::vector<std::int64_t> a(coeffs.size());
  for (std::size_t k = 0; k <= n; ++k) a[k] = pow_sign(n - k) * coeffs[k];
  return a;
}

std::int64_t CharPoly::eval(std::int64_t t) const {
  std::int64_t v = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) v = v * t + coeffs[k];
  return v;
}

std::string CharPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const auto c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const auto m = c < 0 ? -c : c;
    if (m != 1 || k == 0) os << m;
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CharPoly char_poly_whitney(const Arrangement& a, const Limits& limits) {
  check_size(a, limits, "Whitney subset sum");
  CharPoly chi{std::vector<std::int64_t>(a.dim() + 1, 0)};
  // Depth-first over subsets; an empty intersection stays empty for every
  // superset, so those branches contribute nothing and are skipped.
  std::function<void(std::size_t, const AffineSolution&, std::size_t)> walk =
      [&](std::size_t next, const AffineSolution& s, std::size_t chosen) {
        chi.coeffs[s.dim()] += pow_sign(chosen);
        for (std::size_t i = next; i < a.size(); ++i) {
          auto t = intersect(s, a[i]);
          if (t) walk(i + 1, *t, chosen + 1);
        }
      };
  walk(0, whole_space(a.dim()), 0);
  return chi;
}

CharPoly char_poly_moebius(const IntersectionPoset& p) {
  const auto& flats = p.flats();
  std::vector<std::int64_t> mu(flats.size(), 0);
  CharPoly chi{std::vector<std::int64_t>(p.ambient_dim() + 1, 0)};
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].containing.empty()) {
      mu[i] = 1;
    } else {
      std::int64_t s = 0;
      for (std::size_t g = 0; g < i; ++g) {
        if (flats[g].dim() <= flats[i].dim()) continue;
        const auto& cg = flats[g].containing;
        const auto& cf = flats[i].containing;
        if (std::includes(cf.begin(), cf.end(), cg.begin(), cg.end())) s += mu[g];
      }
      mu[i] = -s;
    }
    chi.coeffs[flats[i].dim()] += mu[i];
  }
  return chi;
}

CharPoly char_poly_moebius(const Arrangement& a) { return char_poly_moebius(IntersectionPoset(a)); }

Restriction restriction(const Arrangement& a, const IntersectionPoset& p, std::size_t flat_index) {
  const Flat& flat = p[flat_index];
  Restriction r{Arrangement(flat.dim()), flat.point(), orthogonal_basis(flat.directions(), a.dim())};
  std::vector<Hyperplane> traces;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::binary_search(flat.containing.begin(), flat.containing.end(), i)) continue;
    Vector w(r.frame.size());
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = dot(a[i].normal, r.frame[k]);
    if (is_zero(w)) continue;  // parallel to the flat and not containing it: disjoint
    Hyperplane h = canonicalize(w, a[i].residual(flat.point()) * -1);
    if (std::find(traces.begin(), traces.end(), h) == traces.end()) traces.push_back(std::move(h));
  }
  r.arrangement = Arrangement(flat.dim(), std::move(traces));
  return r;
}

Restriction restriction(const Arrangement& a, const Flat& flat) {
  const IntersectionPoset p(a);
  return restriction(a, p, p.locate(a, flat));
}

CharPoly char_poly_level(const Arrangement& a, const IntersectionPoset& p, std::size_t j) {
  if (j > a.dim()) throw BadParams("level " + std::to_string(j) + " exceeds the dimension");
  CharPoly chi{std::vector<std::int64_t>(j + 1, 0)};
  for (auto idx : p.of_dim(j)) {
    const auto r = restriction(a, p, idx);
    const auto part = char_poly_moebius(r.arrangement);
    for (std::size_t k = 0; k <= j; ++k) chi.coeffs[k] += part.coeffs[k];
  }
  return chi;
}

CharPoly char_poly_level(const Arrangement& a, std::size_t j) { return char_poly_level(a, IntersectionPoset(a), j); }

}  // namespace hyparr

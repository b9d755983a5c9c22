#include "hyparr/arrangement.hpp"

#include <algorithm>

#include "hyparr/error.hpp"

namespace hyparr {

Hyperplane canonicalize(std::span<const Rational> normal, const Rational& offset) {
  if (is_zero(normal)) throw ZeroNormal();
  Integer den_lcm = offset.get_den();
  for (const auto& q : normal) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  // After clearing denominators the offset is an integer too, but only the
  // normal's content is divided out.
  Integer content = 0;
  for (const auto& q : normal) {
    const Integer n = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  int first = 0;
  for (const auto& q : normal) {
    if (sgn(q) != 0) {
      first = sgn(q);
      break;
    }
  }
  Rational factor(den_lcm * first, content);
  factor.canonicalize();
  Hyperplane h;
  h.normal.reserve(normal.size());
  for (const auto& q : normal) h.normal.push_back(q * factor);
  h.offset = offset * factor;
  return h;
}

Arrangement::Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim) {
  hyperplanes_.reserve(hyperplanes.size());
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != dim) {
      throw DimensionMismatch("hyperplane normal has length " + std::to_string(h.normal.size()) +
                              ", expected " + std::to_string(dim));
    }
    Hyperplane c = canonicalize(h.normal, h.offset);
    if (std::find(hyperplanes_.begin(), hyperplanes_.end(), c) != hyperplanes_.end()) {
      throw DuplicateHyperplane("hyperplane " + std::to_string(hyperplanes_.size()) +
                                " repeats an earlier one (normal " + format_point(c.normal) + ", offset " +
                                to_string(c.offset) + ")");
    }
    hyperplanes_.push_back(std::move(c));
  }
}

bool Arrangement::is_linear() const {
  return std::all_of(hyperplanes_.begin(), hyperplanes_.end(), [](const Hyperplane& h) { return h.is_linear(); });
}

Matrix Arrangement::normals() const {
  Matrix m;
  m.reserve(hyperplanes_.size());
  for (const auto& h : hyperplanes_) m.push_back(h.normal);
  return m;
}

std::size_t Arrangement::rank() const { return hyparr::rank(normals(), dim_); }

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> s;
  s.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': s.push_back(1); break;
      case '-': s.push_back(-1); break;
      case '0': s.push_back(0); break;
      default: throw ParseError("sign vector may only contain '+', '-', '0': '" + std::string(text) + "'");
    }
  }
  return SignVector(std::move(s));
}

bool SignVector::has_zero() const {
  return std::find(signs_.begin(), signs_.end(), 0) != signs_.end();
}

std::vector<std::size_t> SignVector::zero_set() const {
  std::vector<std::size_t> z;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] == 0) z.push_back(i);
  }
  return z;
}

bool SignVector::conforms_to(const SignVector& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (signs_[i] != 0 && signs_[i] != other.signs_[i]) return false;
  }
  return true;
}

std::string SignVector::str() const {
  std::string out;
  out.reserve(signs_.size());
  for (auto s : signs_) out += s > 0 ? '+' : (s < 0 ? '-' : '0');
  return out;
}

SignVector sign_vector(const Arrangement& a, std::span<const Rational> x) {
  if (x.size() != a.dim()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, expected " +
                            std::to_string(a.dim()));
  }
  std::vector<std::int8_t> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = static_cast<std::int8_t>(sgn(a[i].residual(x)));
  return SignVector(std::move(s));
}

std::optional<AffineSolution> solve_affine(std::size_t dim, std::span<const Hyperplane> hyperplanes) {
  Matrix m;
  Vector rhs;
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != dim) throw DimensionMismatch("hyperplane dimension differs from ambient dimension");
    m.push_back(h.normal);
    rhs.push_back(h.offset);
  }
  auto point = solve(m, rhs, dim);
  if (!point) return std::nullopt;
  return AffineSolution{std::move(*point), nullspace(m, dim)};
}

std::optional<AffineSolution> solve_affine(const Arrangement& a, std::span<const std::size_t> subset) {
  std::vector<Hyperplane> hs;
  hs.reserve(subset.size());
  for (auto i : subset) hs.push_back(a[i]);
  return solve_affine(a.dim(), hs);
}

void check_size(const Arrangement& a, const Limits& limits, std::string_view what) {
  if (a.size() > limits.max_hyperplanes) {
    throw SizeLimit(std::string(what) + " refused: " + std::to_string(a.size()) + " hyperplanes exceed the cap of " +
                    std::to_string(limits.max_hyperplanes));
  }
}

}  // namespace hyparr

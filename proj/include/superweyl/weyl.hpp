#pragma once

#include <cstddef>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "superweyl/root_system.hpp"

namespace superweyl {

/// An element of W acting linearly on weight coordinates, with its sign.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(std::size_t dim) {
    WeylElement w;
    w.dim_ = dim;
    w.entries_.assign(dim * dim, Scalar());
    for (std::size_t i = 0; i < dim; ++i) w.entries_[i * dim + i] = Scalar(1);
    w.sign_ = 1;
    w.index_nonzeros();
    return w;
  }

  /// Builds from columns: column j is the image of the j-th basis vector.
  static WeylElement from_columns(const std::vector<Weight>& columns, int sign) {
    WeylElement w;
    w.dim_ = columns.size();
    w.entries_.assign(w.dim_ * w.dim_, Scalar());
    for (std::size_t j = 0; j < w.dim_; ++j) {
      for (std::size_t i = 0; i < w.dim_; ++i) w.entries_[i * w.dim_ + j] = columns[j][i];
    }
    w.sign_ = sign;
    w.index_nonzeros();
    return w;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] int sign() const { return sign_; }
  void set_sign(int s) { sign_ = s; }
  [[nodiscard]] const Scalar& entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  [[nodiscard]] Weight apply(const Weight& v) const {
    Weight out(v.n_delta(), v.n_eps());
    if (v.dim() != dim_) throw DomainError("Weyl element and weight dimensions differ");
    for (const auto& nz : nonzeros_) {
      const Scalar& x = v[nz.col];
      if (!x.is_zero()) out[nz.row] += nz.value * x;
    }
    return out;
  }
  Weight operator()(const Weight& v) const { return apply(v); }

  /// Image of the j-th coordinate basis vector.
  [[nodiscard]] std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = entry(i, j);
    return c;
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.dim_ = a.dim_;
    w.entries_.assign(a.dim_ * a.dim_, Scalar());
    for (const auto& x : a.nonzeros_) {
      for (std::size_t j = 0; j < a.dim_; ++j) {
        const Scalar& y = b.entry(x.col, j);
        if (!y.is_zero()) w.entries_[x.row * a.dim_ + j] += x.value * y;
      }
    }
    w.sign_ = a.sign_ * b.sign_;
    w.index_nonzeros();
    return w;
  }

  /// Matrix equality (the sign is a function of the matrix).
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.entries_ == b.entries_; }

  [[nodiscard]] bool is_identity() const { return *this == identity(dim_); }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = dim_;
    for (const auto& e : entries_) h ^= e.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  struct NonZero {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };

  void index_nonzeros() {
    nonzeros_.clear();
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        if (!entries_[i * dim_ + j].is_zero()) nonzeros_.push_back({i, j, entries_[i * dim_ + j]});
      }
    }
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> entries_;
  std::vector<NonZero> nonzeros_;
  int sign_ = 1;
};

}  // namespace superweyl

template <>
struct std::hash<superweyl::WeylElement> {
  std::size_t operator()(const superweyl::WeylElement& w) const noexcept { return w.hash(); }
};

namespace superweyl {

/// sn(w): determinant of w restricted to the span of Delta_0, taken in the basis pi_0.
inline int weyl_sign(const WeylElement& w, const RootSystem& rs) {
  const std::size_t k = rs.even_simple.size();
  if (k == 0) return 1;
  Matrix m(k, std::vector<Scalar>(k));
  for (std::size_t c = 0; c < k; ++c) {
    const auto coords = rs.even_simple_coordinates(w.apply(rs.even_simple[c]));
    if (!coords) throw VerificationError("Weyl element does not preserve the span of the even roots");
    for (std::size_t r = 0; r < k; ++r) m[r][c] = (*coords)[r];
  }
  const Scalar det = determinant(m);
  if (det == Scalar(1)) return 1;
  if (det == Scalar(-1)) return -1;
  throw VerificationError("Weyl element has determinant " + det.to_string());
}

/// s_alpha(lambda) = lambda - 2 (alpha, lambda) / (alpha, alpha) alpha.
inline WeylElement reflection(const Weight& alpha, const RootSystem& rs) {
  const Weight a = rs.canonical(alpha);
  const Scalar norm = rs.bilinear(a, a);
  if (norm.is_zero()) throw DomainError("cannot reflect in the isotropic vector " + a.to_root_string());
  std::vector<Weight> cols;
  cols.reserve(rs.dim());
  for (std::size_t j = 0; j < rs.dim(); ++j) {
    const Weight ej = rs.canonical(Weight::basis(rs.n_delta(), rs.n_eps(), j));
    const Scalar f = Scalar(2) * rs.bilinear(a, ej) / norm;
    cols.push_back(rs.canonical(ej - f * a));
  }
  return WeylElement::from_columns(cols, -1);
}

/// The Weyl group of Delta_0 as an explicit element list.
class WeylGroup {
 public:
  std::vector<WeylElement> elements;    // elements[0] is the identity
  std::vector<WeylElement> generators;  // s_alpha for alpha in pi_0

  [[nodiscard]] std::size_t size() const { return elements.size(); }
  [[nodiscard]] const WeylElement& operator[](std::size_t i) const { return elements[i]; }
  [[nodiscard]] const WeylElement& identity() const { return elements.front(); }

  [[nodiscard]] std::optional<std::size_t> index_of(const WeylElement& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] bool contains(const WeylElement& w) const { return index_.count(w) != 0; }

  [[nodiscard]] auto begin() const { return elements.begin(); }
  [[nodiscard]] auto end() const { return elements.end(); }

 private:
  friend WeylGroup generate(const RootSystem& rs, std::size_t limit);
  std::unordered_map<WeylElement, std::size_t> index_;
};

/// Closure of the simple even reflections under composition (breadth first,
/// deterministic order). Signs are recomputed by determinant.
inline WeylGroup generate(const RootSystem& rs, std::size_t limit = 100000) {
  WeylGroup g;
  for (const auto& a : rs.even_simple) g.generators.push_back(reflection(a, rs));
  WeylElement id = WeylElement::identity(rs.dim());
  // G(3): act on canonical representatives only.
  if (rs.id.family == Family::G3) {
    std::vector<Weight> cols;
    for (std::size_t j = 0; j < rs.dim(); ++j) cols.push_back(rs.canonical(Weight::basis(rs.n_delta(), rs.n_eps(), j)));
    id = WeylElement::from_columns(cols, 1);
  }
  g.elements.push_back(id);
  g.index_.emplace(id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      WeylElement next = s * g.elements[cur];
      if (g.index_.count(next)) continue;
      if (g.elements.size() >= limit) throw DomainError("Weyl group exceeds the element limit");
      g.index_.emplace(next, g.elements.size());
      queue.push_back(g.elements.size());
      g.elements.push_back(std::move(next));
    }
  }
  for (auto& w : g.elements) w.set_sign(weyl_sign(w, rs));
  return g;
}

/// w.lambda = w(lambda + shift) - shift.
inline Weight dot(const WeylElement& w, const Weight& lambda, const Weight& shift) {
  return w.apply(lambda + shift) - shift;
}

/// The distinct points w.lambda, in group order.
inline std::vector<Weight> orbit(const Weight& lambda, const Weight& shift, const WeylGroup& W) {
  std::vector<Weight> out;
  std::unordered_set<Weight> seen;
  for (const auto& w : W) {
    Weight p = dot(w, lambda, shift);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

/// {w : w mu = mu} for the linear (untranslated) action.
inline std::vector<WeylElement> stabilizer(const Weight& mu, const WeylGroup& W) {
  std::vector<WeylElement> out;
  for (const auto& w : W) {
    if (w.apply(mu) == mu) out.push_back(w);
  }
  return out;
}

inline bool is_subgroup_contained(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
  std::unordered_set<WeylElement> bs(b.begin(), b.end());
  for (const auto& w : a) {
    if (!bs.count(w)) return false;
  }
  return true;
}

/// Some w in W with w(from) == to, if any.
inline std::optional<std::size_t> find_linear_witness(const Weight& from, const Weight& to, const WeylGroup& W) {
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].apply(from) == to) return i;
  }
  return std::nullopt;
}

/// Canonical orbit key: the structurally smallest point of W mu.
inline Weight orbit_key(const Weight& mu, const WeylGroup& W) {
  Weight best = mu;
  for (const auto& w : W) {
    Weight p = w.apply(mu);
    if (structural_less(p, best)) best = std::move(p);
  }
  return best;
}

}  // namespace superweyl

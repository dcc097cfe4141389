#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "superweyl/algebra.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/weight.hpp"

namespace superweyl {

class RootSystem;
inline RootSystem build_root_system(const AlgebraId& id);

/// Location of a root inside the catalog lists.
struct RootInfo {
  bool odd = false;
  bool positive = true;
  std::size_t index = 0;  // into even_pos or odd_pos
};

/// Catalog record of a basic classical Lie superalgebra with its fixed
/// (distinguished) triangular decomposition and invariant form.
class RootSystem {
 public:
  AlgebraId id;
  std::vector<Weight> even_pos;      // Delta_0^+
  std::vector<Weight> odd_pos;       // Delta_1^+
  std::vector<Weight> reduced_even;  // alpha in Delta_0^+ with alpha/2 not in Delta_1^+
  std::vector<Weight> reduced_odd;   // beta in Delta_1^+ with 2 beta not in Delta_0^+
  std::vector<Weight> simple;        // pi
  std::vector<Weight> even_simple;   // pi_0
  Weight rho0;
  Weight rho1;
  Weight rho;
  Matrix gram;
  /// rho1 = p (delta_1 + ... + delta_n) for type II algebras.
  std::optional<Scalar> rho1_p;

  [[nodiscard]] std::size_t n_delta() const { return n_delta_; }
  [[nodiscard]] std::size_t n_eps() const { return n_eps_; }
  [[nodiscard]] std::size_t dim() const { return n_delta_ + n_eps_; }
  [[nodiscard]] std::string name() const { return id.to_string(); }

  [[nodiscard]] Weight zero() const { return Weight(n_delta_, n_eps_); }
  [[nodiscard]] Weight delta(std::size_t i) const { return canonical(Weight::delta(n_delta_, n_eps_, i)); }
  [[nodiscard]] Weight eps(std::size_t j) const { return canonical(Weight::eps(n_delta_, n_eps_, j)); }

  /// Normal form of a weight. Identity except for G(3), where the relation
  /// eps1+eps2+eps3=0 is used to eliminate the eps3 coordinate.
  [[nodiscard]] Weight canonical(Weight w) const {
    check_shape(w);
    if (id.family == Family::G3) {
      const Scalar l3 = w[3];
      if (!l3.is_zero()) {
        w[1] -= l3;
        w[2] -= l3;
        w[3] = Scalar(0);
      }
    }
    return w;
  }

  /// The invariant form (mu, nu).
  [[nodiscard]] Scalar bilinear(const Weight& mu, const Weight& nu) const {
    check_shape(mu);
    check_shape(nu);
    Scalar acc;
    const std::size_t d = dim();
    for (std::size_t i = 0; i < d; ++i) {
      if (mu[i].is_zero()) continue;
      if (diagonal_gram_) {
        if (!nu[i].is_zero()) acc += mu[i] * gram[i][i] * nu[i];
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (!nu[j].is_zero() && !gram[i][j].is_zero()) acc += mu[i] * gram[i][j] * nu[j];
      }
    }
    return acc;
  }

  [[nodiscard]] std::optional<RootInfo> find_root(const Weight& w) const {
    auto it = root_index_.find(w);
    if (it == root_index_.end()) return std::nullopt;
    return it->second;
  }
  [[nodiscard]] bool is_root(const Weight& w) const { return root_index_.count(w) != 0; }

  /// Index of w in odd_pos, if w is a positive odd root.
  [[nodiscard]] std::optional<std::size_t> odd_index(const Weight& w) const {
    auto r = find_root(w);
    if (r && r->odd && r->positive) return r->index;
    return std::nullopt;
  }

  /// Every root, positive ones first (even, then odd), then their negatives.
  [[nodiscard]] std::vector<Weight> all_roots() const {
    std::vector<Weight> out = positive_roots();
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    return out;
  }
  [[nodiscard]] std::vector<Weight> positive_roots() const {
    std::vector<Weight> out = even_pos;
    out.insert(out.end(), odd_pos.begin(), odd_pos.end());
    return out;
  }

  /// Coordinates in the basis pi (nullopt when outside its span).
  [[nodiscard]] std::optional<std::vector<Scalar>> simple_coordinates(const Weight& w) const {
    return simple_solver_.coordinates(w);
  }
  /// Coordinates in the basis pi_0 (nullopt when outside the span of Delta_0).
  [[nodiscard]] std::optional<std::vector<Scalar>> even_simple_coordinates(const Weight& w) const {
    return even_simple_solver_.coordinates(w);
  }

  /// Parses a weight in this algebra's coordinates (and canonicalizes it).
  [[nodiscard]] Weight parse_weight(std::string_view text) const {
    return canonical(superweyl::parse_weight(text, n_delta_, n_eps_, id.alpha_substitution()));
  }
  [[nodiscard]] Weight parse_root(std::string_view text) const {
    return canonical(superweyl::parse_root_string(text, n_delta_, n_eps_, id.alpha_substitution()));
  }

  void check_shape(const Weight& w) const {
    if (w.n_delta() != n_delta_ || w.n_eps() != n_eps_) {
      throw DomainError("weight " + w.to_string() + " does not belong to " + name());
    }
  }

 private:
  friend RootSystem build_root_system(const AlgebraId& id);

  void finalize();

  std::size_t n_delta_ = 0;
  std::size_t n_eps_ = 0;
  bool diagonal_gram_ = true;
  BasisSolver simple_solver_;
  BasisSolver even_simple_solver_;
  std::unordered_map<Weight, RootInfo> root_index_;
};

inline void RootSystem::finalize() {
  auto sum = [&](const std::vector<Weight>& roots) {
    Weight s = zero();
    for (const auto& r : roots) s += r;
    return s;
  };
  for (auto* list : {&even_pos, &odd_pos, &simple, &even_simple}) {
    for (auto& r : *list) r = canonical(r);
  }
  rho0 = sum(even_pos) * Scalar(1, 2);
  rho1 = sum(odd_pos) * Scalar(1, 2);
  rho = rho0 - rho1;

  for (std::size_t i = 0; i < even_pos.size(); ++i) root_index_[even_pos[i]] = {false, true, i};
  for (std::size_t i = 0; i < odd_pos.size(); ++i) root_index_[odd_pos[i]] = {true, true, i};
  for (std::size_t i = 0; i < even_pos.size(); ++i) root_index_[-even_pos[i]] = {false, false, i};
  for (std::size_t i = 0; i < odd_pos.size(); ++i) root_index_[-odd_pos[i]] = {true, false, i};

  std::unordered_set<Weight> odd_set(odd_pos.begin(), odd_pos.end());
  std::unordered_set<Weight> even_set(even_pos.begin(), even_pos.end());
  reduced_even.clear();
  reduced_odd.clear();
  for (const auto& a : even_pos) {
    if (!odd_set.count(a * Scalar(1, 2))) reduced_even.push_back(a);
  }
  for (const auto& b : odd_pos) {
    if (!even_set.count(b * Scalar(2))) reduced_odd.push_back(b);
  }

  diagonal_gram_ = true;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (i != j && !gram[i][j].is_zero()) diagonal_gram_ = false;
    }
  }

  simple_solver_ = BasisSolver(simple);
  even_simple_solver_ = BasisSolver(even_simple);
}

/// Builds the catalog record for a supported algebra.
inline RootSystem build_root_system(const AlgebraId& id) {
  RootSystem rs;
  rs.id = id;
  const std::size_t n = id.n;
  const std::size_t m = id.m;
  rs.n_delta_ = n;
  rs.n_eps_ = m;
  const std::size_t dim = n + m;
  auto d = [&](std::size_t i) { return Weight::delta(n, m, i); };
  auto e = [&](std::size_t j) { return Weight::eps(n, m, j); };
  rs.gram.assign(dim, std::vector<Scalar>(dim));
  auto set_diag = [&](const Scalar& dd, const Scalar& ee) {
    for (std::size_t i = 0; i < n; ++i) rs.gram[i][i] = dd;
    for (std::size_t j = 0; j < m; ++j) rs.gram[n + j][n + j] = ee;
  };
  const Scalar half(1, 2);

  // Symplectic part on the deltas: delta_i +- delta_j, 2 delta_i; simple delta_i - delta_{i+1}, 2 delta_n.
  auto add_sp_deltas = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        rs.even_pos.push_back(d(i) - d(j));
        rs.even_pos.push_back(d(i) + d(j));
      }
      rs.even_pos.push_back(Scalar(2) * d(i));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) rs.even_simple.push_back(d(i) - d(i + 1));
    rs.even_simple.push_back(Scalar(2) * d(n - 1));
  };
  auto add_so_eps = [&](bool odd_dimension) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        rs.even_pos.push_back(e(i) - e(j));
        rs.even_pos.push_back(e(i) + e(j));
      }
      if (odd_dimension) rs.even_pos.push_back(e(i));
    }
    for (std::size_t i = 0; i + 1 < m; ++i) rs.even_simple.push_back(e(i) - e(i + 1));
    if (odd_dimension) rs.even_simple.push_back(e(m - 1));
    else rs.even_simple.push_back(e(m - 2) + e(m - 1));
  };

  switch (id.family) {
    case Family::OSP_B: {
      set_diag(Scalar(1), Scalar(-1));
      add_sp_deltas();
      add_so_eps(true);
      for (std::size_t i = 0; i < n; ++i) {
        rs.odd_pos.push_back(d(i));
        for (std::size_t j = 0; j < m; ++j) {
          rs.odd_pos.push_back(d(i) - e(j));
          rs.odd_pos.push_back(d(i) + e(j));
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple.push_back(d(i) - d(i + 1));
      rs.simple.push_back(d(n - 1) - e(0));
      for (std::size_t j = 0; j + 1 < m; ++j) rs.simple.push_back(e(j) - e(j + 1));
      rs.simple.push_back(e(m - 1));
      rs.rho1_p = Scalar(static_cast<std::int64_t>(m)) + half;
      break;
    }
    case Family::OSP_D: {
      if (m < 2) throw DomainError("D(m,n) requires m >= 2");
      set_diag(Scalar(1), Scalar(-1));
      add_sp_deltas();
      add_so_eps(false);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          rs.odd_pos.push_back(d(i) - e(j));
          rs.odd_pos.push_back(d(i) + e(j));
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple.push_back(d(i) - d(i + 1));
      rs.simple.push_back(d(n - 1) - e(0));
      for (std::size_t j = 0; j + 1 < m; ++j) rs.simple.push_back(e(j) - e(j + 1));
      rs.simple.push_back(e(m - 2) + e(m - 1));
      rs.rho1_p = Scalar(static_cast<std::int64_t>(m));
      break;
    }
    case Family::D21A: {
      const Scalar a = id.alpha_scalar();
      if (a.is_zero() || a == Scalar(-1)) throw DomainError("D(2,1,alpha) is degenerate for alpha in {0,-1}");
      rs.gram[0][0] = Scalar(1) + a;
      rs.gram[1][1] = Scalar(-1);
      rs.gram[2][2] = -a;
      rs.even_pos = {Scalar(2) * d(0), Scalar(-2) * e(0), Scalar(-2) * e(1)};
      rs.even_simple = rs.even_pos;
      for (int s1 : {-1, 1}) {
        for (int s2 : {-1, 1}) rs.odd_pos.push_back(d(0) + Scalar(s1) * e(0) + Scalar(s2) * e(1));
      }
      rs.simple = {d(0) + e(0) + e(1), Scalar(-2) * e(0), Scalar(-2) * e(1)};
      rs.rho1_p = Scalar(2);
      break;
    }
    case Family::F4: {
      rs.gram[0][0] = Scalar(3);
      for (std::size_t j = 0; j < 3; ++j) rs.gram[1 + j][1 + j] = Scalar(-1);
      rs.even_pos.push_back(d(0));
      for (std::size_t i = 0; i < 3; ++i) rs.even_pos.push_back(-e(i));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          rs.even_pos.push_back(e(i) - e(j));
          rs.even_pos.push_back(-e(i) - e(j));
        }
      }
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          for (int s3 : {1, -1}) {
            rs.odd_pos.push_back(half * (d(0) + Scalar(s1) * e(0) + Scalar(s2) * e(1) + Scalar(s3) * e(2)));
          }
        }
      }
      rs.even_simple = {d(0), -e(0), e(0) - e(1), e(1) - e(2)};
      rs.simple = {half * (e(0) + e(1) + e(2) + d(0)), -e(0), e(0) - e(1), e(1) - e(2)};
      rs.rho1_p = Scalar(2);
      break;
    }
    case Family::G3: {
      rs.gram[0][0] = Scalar(-2);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) rs.gram[1 + i][1 + j] = i == j ? Scalar(2) : Scalar(-1);
      }
      rs.even_pos = {Scalar(2) * d(0), e(1), e(2), -e(0), e(2) - e(1), e(2) - e(0), e(1) - e(0)};
      rs.even_simple = {Scalar(2) * d(0), e(1), e(2) - e(1)};
      rs.odd_pos.push_back(d(0));
      for (std::size_t i = 0; i < 3; ++i) {
        rs.odd_pos.push_back(d(0) + e(i));
        rs.odd_pos.push_back(d(0) - e(i));
      }
      rs.simple = {d(0) + e(0), e(1), e(2) - e(1)};
      rs.rho1_p = Scalar(7, 2);
      break;
    }
    case Family::GL:
    case Family::SL: {
      // eps_1..eps_m span the gl(m) block with (eps,eps)=1, delta_1..delta_n the gl(n) block.
      set_diag(Scalar(-1), Scalar(1));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) rs.even_pos.push_back(e(i) - e(j));
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) rs.even_pos.push_back(d(i) - d(j));
      }
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) rs.odd_pos.push_back(e(i) - d(j));
      }
      for (std::size_t i = 0; i + 1 < m; ++i) rs.even_simple.push_back(e(i) - e(i + 1));
      for (std::size_t i = 0; i + 1 < n; ++i) rs.even_simple.push_back(d(i) - d(i + 1));
      for (std::size_t i = 0; i + 1 < m; ++i) rs.simple.push_back(e(i) - e(i + 1));
      rs.simple.push_back(e(m - 1) - d(0));
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple.push_back(d(i) - d(i + 1));
      break;
    }
    case Family::OSP_C: {
      // osp(2,2n): eps_1 spans so(2), the deltas carry sp(2n).
      set_diag(Scalar(1), Scalar(-1));
      add_sp_deltas();
      for (std::size_t i = 0; i < n; ++i) {
        rs.odd_pos.push_back(e(0) - d(i));
        rs.odd_pos.push_back(e(0) + d(i));
      }
      rs.simple.push_back(e(0) - d(0));
      for (std::size_t i = 0; i + 1 < n; ++i) rs.simple.push_back(d(i) - d(i + 1));
      rs.simple.push_back(Scalar(2) * d(n - 1));
      break;
    }
  }
  rs.finalize();
  return rs;
}

inline RootSystem build_root_system(std::string_view name) { return build_root_system(parse_algebra(name)); }

/// (beta, beta) == 0 for a root beta; errors when beta is not a root.
inline bool is_isotropic(const Weight& beta, const RootSystem& rs) {
  if (!rs.is_root(beta)) throw DomainError(beta.to_root_string() + " is not a root of " + rs.name());
  return rs.bilinear(beta, beta).is_zero();
}

/// Pairing of a root with a coordinate functional h (h[k] is the value on the k-th basis vector).
inline Scalar functional_pairing(const Weight& w, const std::vector<Rational>& h) {
  if (h.size() != w.dim()) throw DomainError("functional has the wrong number of coordinates");
  Scalar acc;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    if (!w[k].is_zero() && !h[k].is_zero()) acc += w[k] * Scalar(h[k]);
  }
  return acc;
}

struct RootPartition {
  std::vector<Weight> positive;
  std::vector<Weight> negative;
};

/// Splits Delta by the sign of its pairing with a regular functional.
inline RootPartition partition_positive(const RootSystem& rs, const std::vector<Rational>& h) {
  RootPartition out;
  for (const auto& alpha : rs.positive_roots()) {
    const Scalar v = functional_pairing(alpha, h);
    if (v.is_zero()) throw DomainError("functional is not regular: vanishes on " + alpha.to_root_string());
    const int s = v.sign();
    out.positive.push_back(s > 0 ? alpha : -alpha);
    out.negative.push_back(s > 0 ? -alpha : alpha);
  }
  return out;
}

/// A coordinate functional taking the value 1 on every simple root.
inline std::vector<Rational> distinguished_functional(const RootSystem& rs) {
  // Solve h(pi_i) = 1 with free coordinates set to 0.
  const std::size_t d = rs.dim();
  const std::size_t k = rs.simple.size();
  Matrix a(k, std::vector<Scalar>(d + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t c = 0; c < d; ++c) a[i][c] = rs.simple[i][c];
    a[i][d] = Scalar(1);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < k; ++col) {
    std::size_t p = row;
    while (p < k && a[p][col].is_zero()) ++p;
    if (p == k) continue;
    std::swap(a[p], a[row]);
    const Scalar inv = Scalar(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Scalar f = a[r][col];
      for (std::size_t c = 0; c <= d; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Rational> h(d);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) h[pivot_col[r]] = a[r][d].rational();
  return h;
}

/// Minimal elements of a positive system: roots that are not a sum of two
/// members of the system. Throws DomainError if the input is not a positive
/// system of rs.
inline std::vector<Weight> simple_roots(const std::vector<Weight>& positive_system, const RootSystem& rs) {
  std::unordered_set<Weight> members;
  for (const auto& w : positive_system) {
    const Weight c = rs.canonical(w);
    if (!rs.is_root(c)) throw DomainError(c.to_root_string() + " is not a root");
    members.insert(c);
  }
  const std::size_t half = rs.even_pos.size() + rs.odd_pos.size();
  if (members.size() != half) throw DomainError("not a positive system: wrong number of roots");
  for (const auto& w : members) {
    if (members.count(-w)) throw DomainError("not a positive system: contains a root and its negative");
  }
  for (const auto& a : members) {
    for (const auto& b : members) {
      const Weight s = a + b;
      if (rs.is_root(s) && !members.count(s)) throw DomainError("not a positive system: not closed");
    }
  }
  std::vector<Weight> out;
  for (const auto& w0 : positive_system) {
    const Weight w = rs.canonical(w0);
    bool decomposable = false;
    for (const auto& b : members) {
      if (members.count(w - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable && std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

}  // namespace superweyl

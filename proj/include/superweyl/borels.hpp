#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superweyl/verma.hpp"

namespace superweyl {

/// A Borel subsuperalgebra with the fixed even part Delta_0^+: for each
/// beta in Delta_1^+, either beta (sign +1) or -beta (sign -1) is positive.
class Borel {
 public:
  Borel() = default;

  /// The fixed (catalog) Borel.
  static Borel distinguished(const RootSystem& rs) { return Borel(std::vector<int>(rs.odd_pos.size(), 1), rs); }

  Borel(std::vector<int> signs, const RootSystem& rs) : signs_(std::move(signs)) {
    if (signs_.size() != rs.odd_pos.size()) throw DomainError("Borel sign vector has the wrong length");
    for (int s : signs_) {
      if (s != 1 && s != -1) throw DomainError("Borel signs must be +1 or -1");
    }
    rho_ = compute_rho(rs);
  }

  [[nodiscard]] const std::vector<int>& signs() const { return signs_; }
  [[nodiscard]] const Weight& rho() const { return rho_; }

  /// rho_b = rho0 - 1/2 sum of the positive odd roots of b.
  [[nodiscard]] Weight compute_rho(const RootSystem& rs) const {
    Weight half_sum = rs.zero();
    for (const auto& beta : odd_part(rs)) half_sum += beta;
    return rs.rho0 - Scalar(1, 2) * half_sum;
  }

  /// The odd positive roots S of b.
  [[nodiscard]] std::vector<Weight> odd_part(const RootSystem& rs) const {
    std::vector<Weight> out;
    out.reserve(signs_.size());
    for (std::size_t i = 0; i < signs_.size(); ++i) out.push_back(signs_[i] > 0 ? rs.odd_pos[i] : -rs.odd_pos[i]);
    return out;
  }

  /// Delta_0^+ together with S.
  [[nodiscard]] std::vector<Weight> positive_system(const RootSystem& rs) const {
    std::vector<Weight> out = rs.even_pos;
    const auto odd = odd_part(rs);
    out.insert(out.end(), odd.begin(), odd.end());
    return out;
  }

  [[nodiscard]] bool contains_odd(const Weight& beta, const RootSystem& rs) const {
    const auto info = rs.find_root(rs.canonical(beta));
    if (!info || !info->odd) return false;
    return signs_[info->index] == (info->positive ? 1 : -1);
  }

  [[nodiscard]] bool is_distinguished() const {
    return std::all_of(signs_.begin(), signs_.end(), [](int s) { return s > 0; });
  }

  [[nodiscard]] std::vector<Weight> simple_roots(const RootSystem& rs) const {
    return superweyl::simple_roots(positive_system(rs), rs);
  }

  /// Sorted odd roots of b, e.g. ["-d1+e1", "d1", "d1+e1"].
  [[nodiscard]] std::vector<std::string> root_strings(const RootSystem& rs) const {
    std::vector<std::string> out;
    for (const auto& b : odd_part(rs)) out.push_back(b.to_root_string());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Borel& a, const Borel& b) { return a.signs_ == b.signs_; }
  friend bool operator<(const Borel& a, const Borel& b) { return a.signs_ < b.signs_; }

 private:
  std::vector<int> signs_;
  Weight rho_;
};

/// Delta_0^+ u S is closed under root addition.
inline bool is_closed(const Borel& b, const RootSystem& rs) {
  const auto pos = b.positive_system(rs);
  std::unordered_set<Weight> members(pos.begin(), pos.end());
  for (const auto& x : pos) {
    for (const auto& y : pos) {
      const Weight s = rs.canonical(x + y);
      if (rs.is_root(s) && !members.count(s)) return false;
    }
  }
  return true;
}

/// Odd reflection along a simple isotropic root beta of b:
/// S' = (S \ {beta}) u {-beta}, rho_b' = rho_b + beta.
inline Borel odd_reflect(const Borel& b, const Weight& beta_in, const RootSystem& rs) {
  const Weight beta = rs.canonical(beta_in);
  const auto info = rs.find_root(beta);
  if (!info || !info->odd) throw DomainError(beta.to_root_string() + " is not an odd root");
  if (!rs.bilinear(beta, beta).is_zero()) throw DomainError(beta.to_root_string() + " is not isotropic");
  if (!b.contains_odd(beta, rs)) throw DomainError(beta.to_root_string() + " is not a positive root of this Borel");
  const auto simple = b.simple_roots(rs);
  if (std::find(simple.begin(), simple.end(), beta) == simple.end()) {
    throw DomainError(beta.to_root_string() + " is not a simple root of this Borel");
  }
  std::vector<int> signs = b.signs();
  signs[info->index] = -signs[info->index];
  Borel out(std::move(signs), rs);
  if (out.rho() != b.rho() + beta) throw VerificationError("odd reflection changed rho_b inconsistently");
  return out;
}

struct BorelEdge {
  std::size_t target;
  Weight beta;  // simple isotropic root of the source
};

/// The component of the fixed Borel under odd reflections, with its edges.
struct BorelGraph {
  std::vector<Borel> borels;               // borels[0] is the fixed Borel
  std::vector<std::vector<BorelEdge>> edges;

  [[nodiscard]] std::optional<std::size_t> index_of(const Borel& b) const {
    for (std::size_t i = 0; i < borels.size(); ++i) {
      if (borels[i] == b) return i;
    }
    return std::nullopt;
  }

  /// Shortest reflection chain from one Borel to another (roots in order).
  [[nodiscard]] std::vector<Weight> chain(std::size_t from, std::size_t to) const {
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> prev(borels.size());
    std::vector<bool> seen(borels.size(), false);
    std::deque<std::size_t> queue{from};
    seen.at(from) = true;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      if (cur == to) break;
      for (std::size_t e = 0; e < edges[cur].size(); ++e) {
        const std::size_t t = edges[cur][e].target;
        if (seen[t]) continue;
        seen[t] = true;
        prev[t] = std::make_pair(cur, e);
        queue.push_back(t);
      }
    }
    if (!seen.at(to)) throw DomainError("Borels are not connected by odd reflections");
    std::vector<Weight> out;
    for (std::size_t cur = to; cur != from; cur = prev[cur]->first) out.push_back(edges[prev[cur]->first][prev[cur]->second].beta);
    std::reverse(out.begin(), out.end());
    return out;
  }
};

/// Breadth-first closure of the fixed Borel under legal odd reflections.
inline BorelGraph enumerate_borels(const RootSystem& rs, std::size_t limit = 100000) {
  BorelGraph g;
  std::map<std::vector<int>, std::size_t> index;
  g.borels.push_back(Borel::distinguished(rs));
  g.edges.emplace_back();
  index.emplace(g.borels[0].signs(), 0);
  for (std::size_t cur = 0; cur < g.borels.size(); ++cur) {
    const Borel b = g.borels[cur];
    for (const auto& beta : b.simple_roots(rs)) {
      const auto info = rs.find_root(beta);
      if (!info->odd || !rs.bilinear(beta, beta).is_zero()) continue;
      Borel next = odd_reflect(b, beta, rs);
      auto it = index.find(next.signs());
      std::size_t target = 0;
      if (it == index.end()) {
        if (g.borels.size() >= limit) throw DomainError("Borel enumeration exceeds the limit");
        target = g.borels.size();
        index.emplace(next.signs(), target);
        g.borels.push_back(std::move(next));
        g.edges.emplace_back();
      } else {
        target = it->second;
      }
      g.edges[cur].push_back({target, beta});
    }
  }
  return g;
}

enum class TransportMode { Verma, Simple };

inline const char* to_string(TransportMode m) { return m == TransportMode::Verma ? "verma" : "simple"; }

/// One odd reflection step along beta (simple isotropic in b):
/// lambda' = lambda - beta if (lambda + rho_b, beta) != 0, else lambda (simple mode).
inline Weight transport_step(const Weight& lambda, const Borel& b, const Weight& beta, TransportMode mode,
                             const RootSystem& rs) {
  const Weight l = rs.canonical(lambda);
  if (!rs.bilinear(l + b.rho(), beta).is_zero()) return l - beta;
  if (mode == TransportMode::Verma) throw DomainError("Verma transport undefined at " + beta.to_root_string());
  return l;
}

struct TransportResult {
  Weight lambda;
  Borel borel;
  std::vector<Weight> chain;
};

/// Transports lambda from b along the given chain of reflecting roots.
inline TransportResult transport_along(const Weight& lambda, const Borel& b, const std::vector<Weight>& chain,
                                       TransportMode mode, const RootSystem& rs) {
  TransportResult r{rs.canonical(lambda), b, {}};
  for (const auto& beta0 : chain) {
    const Weight beta = rs.canonical(beta0);
    Borel next = odd_reflect(r.borel, beta, rs);
    r.lambda = transport_step(r.lambda, r.borel, beta, mode, rs);
    r.borel = std::move(next);
    r.chain.push_back(beta);
  }
  return r;
}

/// Transports lambda between two Borels of the graph along a shortest chain.
inline TransportResult transport_weight(const Weight& lambda, std::size_t from, std::size_t to,
                                        const BorelGraph& graph, TransportMode mode, const RootSystem& rs) {
  return transport_along(lambda, graph.borels.at(from), graph.chain(from, to), mode, rs);
}

/// Typicality relative to a Borel b (isotropic roots of S, shift rho_b).
inline bool is_typical(const Weight& lambda, const Borel& b, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + b.rho();
  for (const auto& beta : b.odd_part(rs)) {
    if (rs.bilinear(beta, beta).is_zero() && rs.bilinear(v, beta).is_zero()) return false;
  }
  return true;
}

inline bool is_strongly_typical(const Weight& lambda, const Borel& b, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + b.rho();
  for (const auto& beta : b.odd_part(rs)) {
    if (rs.bilinear(v, beta).is_zero()) return false;
  }
  return true;
}

inline Scalar eval_t(const Weight& lambda, const Borel& b, const RootSystem& rs) {
  return eval_t(lambda, b.odd_part(rs), b.rho(), rs);
}

}  // namespace superweyl

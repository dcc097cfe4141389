#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "superweyl/gamma.hpp"
#include "superweyl/verma.hpp"

namespace superweyl {

/// Simple-root coordinates nu of a cone element lambda - nu.pi.
using ConeIndex = std::vector<std::int64_t>;

inline std::int64_t height(const ConeIndex& nu) { return std::accumulate(nu.begin(), nu.end(), std::int64_t{0}); }

/// A formal character truncated to the cone lambda - sum N pi at total
/// height <= depth. coeffs[nu] is the multiplicity of lambda - nu.pi.
class FormalCharacter {
 public:
  FormalCharacter() = default;
  FormalCharacter(Weight base, std::int64_t depth, std::size_t rank) : base_(std::move(base)), depth_(depth), rank_(rank) {
    if (depth < 0) throw DomainError("depth must be nonnegative");
  }

  /// e^base.
  static FormalCharacter unit(Weight base, std::int64_t depth, std::size_t rank) {
    FormalCharacter c(std::move(base), depth, rank);
    c.add(ConeIndex(rank, 0), 1);
    return c;
  }

  [[nodiscard]] const Weight& base() const { return base_; }
  [[nodiscard]] std::int64_t depth() const { return depth_; }
  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::map<ConeIndex, std::int64_t>& coeffs() const { return coeffs_; }

  [[nodiscard]] std::int64_t at(const ConeIndex& nu) const {
    auto it = coeffs_.find(nu);
    return it == coeffs_.end() ? 0 : it->second;
  }

  /// Adds c at nu, ignoring entries beyond the truncation height.
  void add(const ConeIndex& nu, std::int64_t c) {
    if (c == 0 || height(nu) > depth_) return;
    auto [it, inserted] = coeffs_.emplace(nu, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  /// Multiplies by e^{-shift} for a cone shift.
  [[nodiscard]] FormalCharacter shifted(const ConeIndex& shift) const {
    FormalCharacter out(base_, depth_, rank_);
    for (const auto& [nu, c] : coeffs_) {
      ConeIndex m = nu;
      for (std::size_t k = 0; k < rank_; ++k) m[k] += shift[k];
      out.add(m, c);
    }
    return out;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    check_compatible(o);
    for (const auto& [nu, c] : o.coeffs_) add(nu, c);
    return *this;
  }

  /// Multiplication by (1 + e^{-beta}).
  void multiply_one_plus(const ConeIndex& beta) { *this += shifted(beta); }

  /// Multiplication by (1 - e^{-alpha})^{-1} = sum_k e^{-k alpha}, truncated.
  void multiply_geometric(const ConeIndex& alpha) {
    if (height(alpha) <= 0) throw DomainError("geometric series needs a positive cone direction");
    FormalCharacter term = *this;
    while (true) {
      term = term.shifted(alpha);
      if (term.coeffs_.empty()) break;
      *this += term;
    }
  }

  [[nodiscard]] bool all_nonnegative() const {
    for (const auto& [nu, c] : coeffs_) {
      if (c < 0) return false;
    }
    return true;
  }

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.base_ == b.base_ && a.depth_ == b.depth_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_compatible(const FormalCharacter& o) const {
    if (o.base_ != base_ || o.depth_ != depth_ || o.rank_ != rank_) {
      throw DomainError("formal characters have different bases or depths");
    }
  }

  Weight base_;
  std::int64_t depth_ = 0;
  std::size_t rank_ = 0;
  std::map<ConeIndex, std::int64_t> coeffs_;
};

/// nu with mu = lambda - nu.pi, if nu is a nonnegative integral vector.
inline std::optional<ConeIndex> cone_index(const Weight& difference, const RootSystem& rs) {
  const auto coords = rs.simple_coordinates(rs.canonical(difference));
  if (!coords) return std::nullopt;
  ConeIndex nu;
  for (const auto& c : *coords) {
    if (!c.is_integer() || c.sign() < 0) return std::nullopt;
    nu.push_back(c.rational().num());
  }
  return nu;
}

inline ConeIndex root_cone_index(const Weight& positive_root, const RootSystem& rs) {
  auto nu = cone_index(positive_root, rs);
  if (!nu) throw VerificationError(positive_root.to_root_string() + " is not in N pi");
  return *nu;
}

namespace detail {

inline void apply_even_denominator(FormalCharacter& ch, const RootSystem& rs) {
  for (const auto& alpha : rs.even_pos) ch.multiply_geometric(root_cone_index(alpha, rs));
}

}  // namespace detail

/// ch M~(lambda) = e^lambda prod_{Delta_1^+}(1 + e^{-beta}) prod_{Delta_0^+}(1 - e^{-alpha})^{-1}, truncated.
inline FormalCharacter verma_character(const Weight& lambda, std::int64_t depth, const RootSystem& rs) {
  FormalCharacter ch = FormalCharacter::unit(rs.canonical(lambda), depth, rs.simple.size());
  for (const auto& beta : rs.odd_pos) ch.multiply_one_plus(root_cone_index(beta, rs));
  detail::apply_even_denominator(ch, rs);
  return ch;
}

/// The same character through the even-part filtration: the sum over gamma of
/// the even Verma characters of lambda - |gamma|.
inline FormalCharacter verma_character_by_filtration(const Weight& lambda, std::int64_t depth, const RootSystem& rs) {
  const std::size_t rank = rs.simple.size();
  FormalCharacter ch(rs.canonical(lambda), depth, rank);
  FormalCharacter even = FormalCharacter::unit(ch.base(), depth, rank);
  detail::apply_even_denominator(even, rs);
  for (const auto& g : enumerate_gamma(rs)) ch += even.shifted(root_cone_index(g.sum, rs));
  return ch;
}

/// ch V~(lambda) = D sum_w sn(w) e^{w.lambda}, with orbit terms outside the cone dropped.
inline FormalCharacter typical_character(const Weight& lambda_in, std::int64_t depth, const RootSystem& rs,
                                         const WeylGroup& W) {
  const Weight lambda = rs.canonical(lambda_in);
  if (!is_typical(lambda, rs)) throw DomainError("typical_character requires a typical weight");
  const std::size_t rank = rs.simple.size();
  FormalCharacter ch(lambda, depth, rank);
  for (const auto& w : W) {
    if (auto nu = cone_index(lambda - dot(w, lambda, rs.rho), rs)) ch.add(*nu, w.sign());
  }
  for (const auto& beta : rs.odd_pos) ch.multiply_one_plus(root_cone_index(beta, rs));
  detail::apply_even_denominator(ch, rs);
  return ch;
}

/// Stored multiplicity of mu; zero outside the cone, an error beyond the truncation.
inline std::int64_t weight_multiplicity(const FormalCharacter& ch, const Weight& mu, const RootSystem& rs) {
  const auto nu = cone_index(ch.base() - rs.canonical(mu), rs);
  if (!nu) return 0;
  if (height(*nu) > ch.depth()) throw DomainError("insufficient depth for weight " + mu.to_string());
  return ch.at(*nu);
}

/// Weight of a cone index.
inline Weight cone_weight(const FormalCharacter& ch, const ConeIndex& nu, const RootSystem& rs) {
  Weight w = ch.base();
  for (std::size_t k = 0; k < nu.size(); ++k) {
    if (nu[k] != 0) w -= Scalar(nu[k]) * rs.simple[k];
  }
  return rs.canonical(w);
}

}  // namespace superweyl

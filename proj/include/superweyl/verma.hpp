#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superweyl/gamma.hpp"

namespace superweyl {

// ---------------------------------------------------------------------------
// Typicality and the polynomial t

/// (lambda + rho, beta) != 0 for every isotropic beta.
inline bool is_typical(const Weight& lambda, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + rs.rho;
  for (const auto& beta : rs.reduced_odd) {
    if (rs.bilinear(v, beta).is_zero()) return false;
  }
  return true;
}

/// (lambda + rho, beta) != 0 for every odd beta.
inline bool is_strongly_typical(const Weight& lambda, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + rs.rho;
  for (const auto& beta : rs.odd_pos) {
    if (rs.bilinear(v, beta).is_zero()) return false;
  }
  return true;
}

/// prod_beta (lambda + shift, beta) over the given odd roots.
inline Scalar eval_t(const Weight& lambda, const std::vector<Weight>& odd_positive, const Weight& shift,
                     const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + shift;
  Scalar acc(1);
  for (const auto& beta : odd_positive) acc *= rs.bilinear(v, beta);
  return acc;
}

/// t evaluated at lambda for the fixed Borel (odd roots Delta_1^+, shift rho).
inline Scalar eval_t(const Weight& lambda, const RootSystem& rs) { return eval_t(lambda, rs.odd_pos, rs.rho, rs); }

// ---------------------------------------------------------------------------
// Shapovalov factors

enum class FactorKind { EvenReduced, OddNonIsotropic, Isotropic };

inline const char* to_string(FactorKind k) {
  switch (k) {
    case FactorKind::EvenReduced: return "even-reduced";
    case FactorKind::OddNonIsotropic: return "odd-nonisotropic";
    case FactorKind::Isotropic: return "isotropic";
  }
  return "?";
}

struct ShapovalovFactor {
  Weight root;
  std::optional<std::int64_t> n;  // absent for isotropic factors
  FactorKind kind = FactorKind::EvenReduced;
};

/// n = 2 (mu, alpha) / (alpha, alpha) when it is a positive integer.
inline std::optional<std::int64_t> positive_integer_ratio(const Weight& mu, const Weight& alpha, const RootSystem& rs) {
  const Scalar n = Scalar(2) * rs.bilinear(mu, alpha) / rs.bilinear(alpha, alpha);
  if (!n.is_positive_integer()) return std::nullopt;
  return n.rational().num();
}

/// Every linear factor of the Shapovalov determinant vanishing at lambda.
inline std::vector<ShapovalovFactor> vanishing_shapovalov_factors(const Weight& lambda, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + rs.rho;
  std::vector<ShapovalovFactor> out;
  for (const auto& alpha : rs.reduced_even) {
    if (auto n = positive_integer_ratio(v, alpha, rs)) out.push_back({alpha, n, FactorKind::EvenReduced});
  }
  for (const auto& beta : rs.odd_pos) {
    if (rs.bilinear(beta, beta).is_zero()) {
      if (rs.bilinear(v, beta).is_zero()) out.push_back({beta, std::nullopt, FactorKind::Isotropic});
    } else if (auto n = positive_integer_ratio(v, beta, rs); n && *n % 2 != 0) {
      out.push_back({beta, n, FactorKind::OddNonIsotropic});
    }
  }
  return out;
}

inline bool is_verma_simple(const Weight& lambda, const RootSystem& rs) {
  return vanishing_shapovalov_factors(lambda, rs).empty();
}

/// Simplicity of the even-part Verma module M(mu): 2(mu+rho0, alpha)/(alpha, alpha)
/// is not a positive integer for any alpha in Delta_0^+.
inline bool is_g0_verma_simple(const Weight& mu, const RootSystem& rs) {
  const Weight v = rs.canonical(mu) + rs.rho0;
  for (const auto& alpha : rs.even_pos) {
    if (positive_integer_ratio(v, alpha, rs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The even-part Verma filtration

/// The multiset {lambda - |gamma| : gamma in Gamma} in enumeration order.
inline std::vector<Weight> g0_factors(const Weight& lambda, const RootSystem& rs) {
  const Weight l = rs.canonical(lambda);
  std::vector<Weight> out;
  for (const auto& g : enumerate_gamma(rs)) out.push_back(l - g.sum);
  return out;
}

/// g0_factors split by the parity of the generating gamma.
inline std::pair<std::vector<Weight>, std::vector<Weight>> parity_split_factors(const Weight& lambda,
                                                                              const RootSystem& rs) {
  const Weight l = rs.canonical(lambda);
  std::pair<std::vector<Weight>, std::vector<Weight>> out;
  for (const auto& g : enumerate_gamma(rs)) {
    (parity_class(g) == Parity::Even ? out.first : out.second).push_back(l - g.sum);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Partial order and orbit extremality

/// mu <= lambda, i.e. lambda - mu is a nonnegative integral combination of pi.
inline bool leq(const Weight& mu, const Weight& lambda, const RootSystem& rs) {
  const auto coords = rs.simple_coordinates(rs.canonical(lambda - mu));
  if (!coords) return false;
  for (const auto& c : *coords) {
    if (!c.is_integer() || c.sign() < 0) return false;
  }
  return true;
}

enum class Extremum { Min, Max };

/// No point of the dot orbit W.lambda lies strictly above (Max) or below (Min) lambda.
inline bool is_dot_extremal(const Weight& lambda, Extremum which, const WeylGroup& W, const RootSystem& rs) {
  const Weight l = rs.canonical(lambda);
  for (const auto& p : orbit(l, rs.rho, W)) {
    if (p == l) continue;
    if (which == Extremum::Max ? leq(l, p, rs) : leq(p, l, rs)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Decomposability of the Verma module over the even part

struct DecompositionWitness {
  GammaSet first;
  GammaSet second;
  std::size_t w_index = 0;  // W[w_index](lambda - |second| + rho0) = lambda - |first| + rho0
};

struct DecompositionResult {
  bool decomposes = true;
  std::optional<DecompositionWitness> witness;
};

/// Same-parity gammas whose even-part central characters coincide must have
/// equal weight sums. Orbits are grouped by a canonical key, so the cost is
/// one orbit scan per gamma rather than a scan per pair.
inline DecompositionResult verma_decomposition(const Weight& lambda, const RootSystem& rs, const WeylGroup& W) {
  check_gamma_guard(rs, kScanGammaLimit, "verma_decomposes");
  const Weight l = rs.canonical(lambda);
  DecompositionResult result;
  std::unordered_map<Weight, std::size_t> first_by_key[2];
  const auto gammas = enumerate_gamma(rs);
  for (std::size_t gi = 0; gi < gammas.size(); ++gi) {
    const auto& g = gammas[gi];
    const Weight point = l - g.sum + rs.rho0;
    auto& groups = first_by_key[parity_class(g) == Parity::Even ? 0 : 1];
    auto [it, inserted] = groups.emplace(orbit_key(point, W), gi);
    if (inserted) continue;
    const auto& rep = gammas[it->second];
    if (rep.sum == g.sum) continue;
    const Weight rep_point = l - rep.sum + rs.rho0;
    const auto w = find_linear_witness(point, rep_point, W);
    if (!w) throw VerificationError("orbit key collision without a Weyl witness");
    result.decomposes = false;
    result.witness = DecompositionWitness{rep, g, *w};
    return result;
  }
  return result;
}

inline bool verma_decomposes(const Weight& lambda, const RootSystem& rs, const WeylGroup& W) {
  return verma_decomposition(lambda, rs, W).decomposes;
}

/// The companion condition: M(lambda - |gamma|) is simple for every gamma.
inline bool all_g0_factors_simple(const Weight& lambda, const RootSystem& rs) {
  for (const auto& mu : g0_factors(lambda, rs)) {
    if (!is_g0_verma_simple(mu, rs)) return false;
  }
  return true;
}

/// mu + rho0 in W(mu' + rho0).
inline bool g0_central_char_equal(const Weight& mu, const Weight& mu_prime, const WeylGroup& W, const RootSystem& rs) {
  return find_linear_witness(rs.canonical(mu_prime) + rs.rho0, rs.canonical(mu) + rs.rho0, W).has_value();
}

}  // namespace superweyl

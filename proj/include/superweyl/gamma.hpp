#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "superweyl/weyl.hpp"

namespace superweyl {

/// Largest #Delta_1^+ accepted by the 2^k enumerations. The environment
/// variable SUPERWEYL_MAX_GAMMA overrides the built-in default.
inline std::size_t gamma_guard(std::size_t default_limit) {
  if (const char* env = std::getenv("SUPERWEYL_MAX_GAMMA")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return std::min<unsigned long>(v, 62);
  }
  return default_limit;
}

inline constexpr std::size_t kEnumerateGammaLimit = 20;
inline constexpr std::size_t kScanGammaLimit = 15;

inline void check_gamma_guard(const RootSystem& rs, std::size_t default_limit, const char* what) {
  const std::size_t limit = gamma_guard(default_limit);
  if (rs.odd_pos.size() > limit) {
    throw DomainError(std::string(what) + ": 2^" + std::to_string(rs.odd_pos.size()) +
                      " subsets of odd roots exceed the guard 2^" + std::to_string(limit) +
                      " (set SUPERWEYL_MAX_GAMMA to raise it)");
  }
}

/// A subset of Delta_1^+, stored as a bitmask over rs.odd_pos, with its weight sum.
struct GammaSet {
  std::uint64_t mask = 0;
  Weight sum;  // |gamma|

  [[nodiscard]] bool contains(std::size_t i) const { return (mask >> i) & 1U; }
  [[nodiscard]] std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }
  [[nodiscard]] bool empty() const { return mask == 0; }

  [[nodiscard]] std::vector<Weight> members(const RootSystem& rs) const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < rs.odd_pos.size(); ++i) {
      if (contains(i)) out.push_back(rs.odd_pos[i]);
    }
    return out;
  }

  /// Sorted root strings, e.g. ["d1-e1", "d1-e1+e2"].
  [[nodiscard]] std::vector<std::string> root_strings(const RootSystem& rs) const {
    std::vector<std::string> out;
    for (const auto& r : members(rs)) out.push_back(r.to_root_string());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const GammaSet& a, const GammaSet& b) { return a.mask == b.mask; }
};

inline GammaSet make_gamma(std::uint64_t mask, const RootSystem& rs) {
  if (rs.odd_pos.size() < 64 && (mask >> rs.odd_pos.size()) != 0) {
    throw DomainError("gamma mask refers to odd roots beyond Delta_1^+");
  }
  GammaSet g;
  g.mask = mask;
  g.sum = rs.zero();
  for (std::size_t i = 0; i < rs.odd_pos.size(); ++i) {
    if (g.contains(i)) g.sum += rs.odd_pos[i];
  }
  return g;
}

/// Builds the subset from explicit roots (each must lie in Delta_1^+).
inline GammaSet make_gamma(const std::vector<Weight>& roots, const RootSystem& rs) {
  std::uint64_t mask = 0;
  for (const auto& r : roots) {
    const auto idx = rs.odd_index(rs.canonical(r));
    if (!idx) throw DomainError(r.to_root_string() + " is not a positive odd root of " + rs.name());
    mask |= std::uint64_t{1} << *idx;
  }
  return make_gamma(mask, rs);
}

/// All 2^{#Delta_1^+} subsets in mask order.
inline std::vector<GammaSet> enumerate_gamma(const RootSystem& rs, std::size_t default_limit = kEnumerateGammaLimit) {
  check_gamma_guard(rs, default_limit, "enumerate_gamma");
  const std::size_t k = rs.odd_pos.size();
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<GammaSet> out;
  out.reserve(count);
  out.push_back(GammaSet{0, rs.zero()});
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    // Sum of mask = sum of mask without its lowest bit + that root.
    const std::uint64_t rest = mask & (mask - 1);
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    out.push_back(GammaSet{mask, out[rest].sum + rs.odd_pos[low]});
  }
  return out;
}

/// w_* gamma = w(gamma u -(Delta_1^+ \ gamma)) n Delta_1^+.
inline GammaSet star(const WeylElement& w, const GammaSet& gamma, const RootSystem& rs) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < rs.odd_pos.size(); ++i) {
    const Weight src = gamma.contains(i) ? rs.odd_pos[i] : -rs.odd_pos[i];
    const auto info = rs.find_root(rs.canonical(w.apply(src)));
    if (!info || !info->odd) throw VerificationError("Weyl element does not permute the odd roots");
    if (info->positive) mask |= std::uint64_t{1} << info->index;
  }
  return make_gamma(mask, rs);
}

enum class Parity { Even, Odd };

inline Parity parity_class(const GammaSet& gamma) { return gamma.size() % 2 == 0 ? Parity::Even : Parity::Odd; }

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

enum class LatticeClass { Q0, Q1, Neither };

inline const char* to_string(LatticeClass c) {
  switch (c) {
    case LatticeClass::Q0: return "Q0";
    case LatticeClass::Q1: return "Q1";
    case LatticeClass::Neither: return "neither";
  }
  return "?";
}

/// Value of the parity detector on mu: the grading element z for type I, the
/// delta-coordinate sum for type II (the delta coordinate itself for F(4)).
inline Scalar lattice_detector(const Weight& mu, const RootSystem& rs) {
  Scalar acc;
  switch (rs.id.family) {
    case Family::GL:
    case Family::SL:
      for (std::size_t j = 0; j < rs.n_eps(); ++j) acc += mu.eps_coord(j);
      return acc;
    case Family::OSP_C: return mu.eps_coord(0);
    case Family::F4: return Scalar(2) * mu.delta_coord(0);
    default:
      for (std::size_t i = 0; i < rs.n_delta(); ++i) acc += mu.delta_coord(i);
      return acc;
  }
}

/// Membership of mu in Q_0(pi) (even number of odd roots) or Q_1(pi), decided
/// by an integral solve in the basis pi followed by the parity detector.
inline LatticeClass q_lattice_class(const Weight& mu, const RootSystem& rs) {
  const Weight c = rs.canonical(mu);
  const auto coords = rs.simple_coordinates(c);
  if (!coords) return LatticeClass::Neither;
  for (const auto& x : *coords) {
    if (!x.is_integer()) return LatticeClass::Neither;
  }
  const Scalar z = lattice_detector(c, rs);
  if (!z.is_integer()) return LatticeClass::Neither;
  const mpz_class v = z.rational().to_mpq().get_num();
  return mpz_even_p(v.get_mpz_t()) ? LatticeClass::Q0 : LatticeClass::Q1;
}

}  // namespace superweyl

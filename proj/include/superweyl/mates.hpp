#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "superweyl/verma.hpp"

namespace superweyl {

/// A central character of g, identified with the dot orbit of a representative.
struct CentralCharacter {
  Weight rep;

  [[nodiscard]] bool is_strongly_typical(const RootSystem& rs) const { return superweyl::is_strongly_typical(rep, rs); }
  [[nodiscard]] bool same_as(const CentralCharacter& other, const WeylGroup& W, const RootSystem& rs) const {
    return find_linear_witness(rs.canonical(other.rep) + rs.rho, rs.canonical(rep) + rs.rho, W).has_value();
  }
};

struct MateWitness {
  /// Condition (i) failure: W[w_index](lambda - |gamma| + rho0) = lambda - |gamma_prime| + rho0.
  std::optional<GammaSet> gamma_prime;
  std::optional<std::size_t> w_index;
  /// Condition (ii) failure: W[stabilizer_index] fixes lambda - |gamma| + rho0 but not lambda + rho.
  std::optional<std::size_t> stabilizer_index;
};

struct MateCertificate {
  Weight lambda;
  GammaSet gamma;
  Weight mate_weight;  // lambda - |gamma|
  bool is_mate = false;
  bool is_perfect = false;
  MateWitness witnesses;
};

/// Whether the representative has no zero delta-coordinate in lambda + rho.
/// W_1 signed-permutes the delta coordinates, so this is an orbit invariant.
inline bool is_generic(const CentralCharacter& chi, const RootSystem& rs, const WeylGroup& /*W*/) {
  if (rs.id.is_type_one()) throw DomainError("genericity is only defined for type II algebras");
  const Weight v = rs.canonical(chi.rep) + rs.rho;
  for (std::size_t i = 0; i < rs.n_delta(); ++i) {
    if (v.delta_coord(i).is_zero()) return false;
  }
  return true;
}

namespace detail {

inline Rational rational_coord(const Weight& v, std::size_t k) {
  if (!v[k].is_rational()) throw DomainError("coordinate " + v[k].to_string() + " is not rational-valued");
  return v[k].rational();
}

/// Coordinates of v sorted by absolute value, descending.
inline std::vector<Rational> sorted_abs(const std::vector<Rational>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(x.abs());
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
  return out;
}

}  // namespace detail

/// Normal form of lambda + rho inside the orbit, as described for each case:
/// delta coordinates made positive (generic), or the sorted shapes of the
/// non-generic D(m,n), D(2,1,alpha) and F(4) recipes. Returns lambda with the
/// normal-form lambda + rho; errors when no orbit member has that shape.
inline Weight dominant_rep(const CentralCharacter& chi, const RootSystem& rs, const WeylGroup& W) {
  const Weight v = rs.canonical(chi.rep) + rs.rho;
  for (std::size_t k = 0; k < v.dim(); ++k) detail::rational_coord(v, k);
  Weight target = v;
  const bool generic = rs.id.is_type_one() || is_generic(chi, rs, W);
  if (generic) {
    if (rs.id.is_type_one()) return rs.canonical(chi.rep);
    for (std::size_t i = 0; i < rs.n_delta(); ++i) target[i] = Scalar(v[i].rational().abs());
  } else {
    const std::size_t n = rs.n_delta();
    const std::size_t m = rs.n_eps();
    std::vector<Rational> ks;
    std::vector<Rational> ls;
    for (std::size_t i = 0; i < n; ++i) ks.push_back(v[i].rational());
    for (std::size_t j = 0; j < m; ++j) ls.push_back(v[n + j].rational());
    const auto k_sorted = detail::sorted_abs(ks);
    for (std::size_t i = 0; i < n; ++i) target[i] = Scalar(k_sorted[i]);
    auto l_sorted = detail::sorted_abs(ls);
    switch (rs.id.family) {
      case Family::OSP_D: {
        // W_2 changes an even number of signs: the sign of l_m is the product of the signs.
        int sign = 1;
        for (const auto& l : ls) sign *= l.sign();
        if (sign < 0) l_sorted.back() = -l_sorted.back();
        break;
      }
      case Family::D21A:
        // W acts by independent sign changes on each coordinate.
        for (std::size_t j = 0; j < m; ++j) l_sorted[j] = ls[j].abs();
        break;
      case Family::F4:
        // W_2 is the full group of signed permutations of the eps coordinates.
        break;
      default: throw DomainError("only D(m,n), D(2,1,alpha) and F(4) admit non-generic strongly typical characters");
    }
    for (std::size_t j = 0; j < m; ++j) target[n + j] = Scalar(l_sorted[j]);
  }
  if (!find_linear_witness(v, target, W)) {
    throw DomainError("no orbit member of " + v.to_string() + " has the normal form " + target.to_string());
  }
  return target - rs.rho;
}

/// Number of zero delta coordinates of lambda + rho.
inline std::size_t zero_delta_count(const Weight& lambda, const RootSystem& rs) {
  const Weight v = rs.canonical(lambda) + rs.rho;
  std::size_t d = 0;
  for (std::size_t i = 0; i < rs.n_delta(); ++i) d += v.delta_coord(i).is_zero() ? 1 : 0;
  return d;
}

/// The explicit subset gamma_d for a lambda with lambda + rho in normal form
/// (the empty set in the generic case).
inline GammaSet gamma_d(const Weight& normal_lambda, const RootSystem& rs) {
  const Weight lambda = rs.canonical(normal_lambda);
  if (!is_strongly_typical(lambda, rs)) throw DomainError("gamma_d requires a strongly typical weight");
  if (rs.id.is_type_one()) return make_gamma(0, rs);
  const Weight v = lambda + rs.rho;
  const std::size_t n = rs.n_delta();
  const std::size_t m = rs.n_eps();
  for (std::size_t k = 0; k < v.dim(); ++k) detail::rational_coord(v, k);
  auto k_at = [&](std::size_t i) { return v[i].rational(); };
  auto l_at = [&](std::size_t j) { return v[n + j].rational(); };
  const std::size_t d = zero_delta_count(lambda, rs);
  auto not_normal = [&]() { return DomainError("lambda + rho = " + v.to_string() + " is not in normal form"); };

  if (d == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      if (k_at(i).sign() <= 0) throw not_normal();
    }
    return make_gamma(0, rs);
  }
  const Weight delta = rs.delta(0);
  switch (rs.id.family) {
    case Family::OSP_D: {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (k_at(i) < k_at(i + 1)) throw not_normal();
      }
      for (std::size_t i = 0; i < n - d; ++i) {
        if (k_at(i).sign() <= 0) throw not_normal();
      }
      for (std::size_t j = 0; j + 1 < m; ++j) {
        if (l_at(j).sign() <= 0) throw not_normal();
        if (j + 2 < m && l_at(j) < l_at(j + 1)) throw not_normal();
      }
      const Rational lm = l_at(m - 1);
      if (lm.is_zero() || l_at(m - 2) < lm.abs()) throw not_normal();
      const int sn = lm.sign() > 0 ? 1 : -1;
      std::vector<Weight> roots;
      for (std::size_t i = n - d; i < n; ++i) {
        for (std::size_t j = 0; j + 1 < m; ++j) roots.push_back(rs.delta(i) - rs.eps(j));
        roots.push_back(rs.delta(i) - Scalar(sn) * rs.eps(m - 1));
      }
      return make_gamma(roots, rs);
    }
    case Family::D21A: {
      const Rational l1 = l_at(0);
      const Rational l2 = l_at(1);
      if (l1.sign() < 0 || l2.sign() < 0 || (l1.is_zero() && l2.is_zero())) throw not_normal();
      // With l1 = 0 the roles of eps1 and eps2 are exchanged.
      if (l1.sign() > 0) return make_gamma({delta - rs.eps(0) - rs.eps(1), delta - rs.eps(0) + rs.eps(1)}, rs);
      return make_gamma({delta - rs.eps(0) - rs.eps(1), delta + rs.eps(0) - rs.eps(1)}, rs);
    }
    case Family::F4: {
      const Rational l1 = l_at(0);
      const Rational l2 = l_at(1);
      const Rational l3 = l_at(2);
      if (!(l1 >= l2 && l2 >= l3 && l3.sign() >= 0 && l1.sign() > 0)) throw not_normal();
      const Scalar h(1, 2);
      const Weight e1 = rs.eps(0);
      const Weight e2 = rs.eps(1);
      const Weight e3 = rs.eps(2);
      if (l1 > l2) {
        std::vector<Weight> roots;
        for (int s2 : {1, -1}) {
          for (int s3 : {1, -1}) roots.push_back(h * (delta - e1 + Scalar(s2) * e2 + Scalar(s3) * e3));
        }
        return make_gamma(roots, rs);
      }
      return make_gamma({h * (delta - e1 - e2 - e3), h * (delta + e1 - e2 - e3), h * (delta - e1 + e2 - e3),
                         h * (delta - e1 - e2 + e3)},
                        rs);
    }
    default: throw not_normal();
  }
}

/// Brute-force check of the mate conditions for the even-part central
/// character of M(lambda - |gamma|):
///  (i)  lambda - |gamma'| + rho0 is not in W(lambda - |gamma| + rho0) for gamma' != gamma;
///  (ii) Stab_W(lambda - |gamma| + rho0) is contained in Stab_W(lambda + rho).
inline MateCertificate verify_mate(const Weight& lambda_in, const GammaSet& gamma, const RootSystem& rs,
                                   const WeylGroup& W) {
  check_gamma_guard(rs, kScanGammaLimit, "verify_mate");
  MateCertificate cert;
  cert.lambda = rs.canonical(lambda_in);
  cert.gamma = gamma;
  cert.mate_weight = cert.lambda - gamma.sum;
  const Weight point = cert.mate_weight + rs.rho0;
  std::unordered_map<Weight, std::size_t> orbit_points;
  for (std::size_t i = 0; i < W.size(); ++i) orbit_points.emplace(W[i].apply(point), i);
  cert.is_mate = true;
  for (const auto& g : enumerate_gamma(rs)) {
    if (g.mask == gamma.mask) continue;
    auto it = orbit_points.find(cert.lambda - g.sum + rs.rho0);
    if (it != orbit_points.end()) {
      cert.is_mate = false;
      cert.witnesses.gamma_prime = g;
      cert.witnesses.w_index = it->second;
      break;
    }
  }
  bool contained = true;
  const Weight v = cert.lambda + rs.rho;
  for (std::size_t i = 0; i < W.size(); ++i) {
    if (W[i].apply(point) == point && W[i].apply(v) != v) {
      contained = false;
      cert.witnesses.stabilizer_index = i;
      break;
    }
  }
  cert.is_perfect = cert.is_mate && contained;
  return cert;
}

/// Chooses the representative and gamma for a strongly typical character and
/// verifies the result; a certificate that is not perfect is a hard error.
inline MateCertificate find_perfect_mate(const CentralCharacter& chi, const RootSystem& rs, const WeylGroup& W) {
  if (!chi.is_strongly_typical(rs)) throw DomainError("central character is not strongly typical");
  const Weight lambda = dominant_rep(chi, rs, W);
  const GammaSet gamma = gamma_d(lambda, rs);
  MateCertificate cert = verify_mate(lambda, gamma, rs, W);
  if (!cert.is_perfect) {
    std::string why = cert.is_mate ? "stabilizer condition fails" : "orbit condition fails";
    throw VerificationError("mate for lambda = " + lambda.to_string() + " is not perfect: " + why);
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Signed permutations

/// Calls f(perm, signs) for every signed permutation of s letters; the
/// permutation maps x to y with y[i] = signs[i] * x[perm[i]].
inline void for_each_signed_permutation(std::size_t s,
                                        const std::function<void(const std::vector<std::size_t>&,
                                                                 const std::vector<int>&)>& f) {
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
      std::vector<int> signs(s);
      for (std::size_t i = 0; i < s; ++i) signs[i] = ((mask >> i) & 1U) ? -1 : 1;
      f(perm, signs);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// Exhaustive check of the non-signed permutation lemma: any signed
/// permutation taking (a_i + d) to (a_i + d - r_i) is a plain permutation and
/// forces all r_i = 0 (violations throw VerificationError). Returns whether
/// such a signed permutation exists.
inline bool check_nonsigned(const Scalar& d, const std::vector<Scalar>& a, const std::vector<Scalar>& r) {
  if (a.size() != r.size()) throw DomainError("a and r must have equal length");
  if (d.sign() <= 0) throw DomainError("d must be positive");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sign() <= 0) throw DomainError("every a_i must be positive");
    if (r[i].sign() < 0 || (r[i] - Scalar(2) * d).sign() > 0) throw DomainError("every r_i must lie in [0, 2d]");
  }
  const std::size_t s = a.size();
  std::vector<Scalar> x(s);
  std::vector<Scalar> y(s);
  for (std::size_t i = 0; i < s; ++i) {
    x[i] = a[i] + d;
    y[i] = a[i] + d - r[i];
  }
  bool found = false;
  for_each_signed_permutation(s, [&](const std::vector<std::size_t>& perm, const std::vector<int>& signs) {
    for (std::size_t i = 0; i < s; ++i) {
      if (y[i] != Scalar(signs[i]) * x[perm[i]]) return;
    }
    found = true;
    for (std::size_t i = 0; i < s; ++i) {
      if (signs[i] < 0) throw VerificationError("a signed permutation maps (a+d) to (a+d-r)");
      if (!r[i].is_zero()) throw VerificationError("a permutation maps (a+d) to (a+d-r) with r != 0");
    }
  });
  return found;
}

}  // namespace superweyl

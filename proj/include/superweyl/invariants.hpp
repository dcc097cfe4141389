#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "superweyl/borels.hpp"
#include "superweyl/characters.hpp"
#include "superweyl/mates.hpp"

namespace superweyl {

// ---------------------------------------------------------------------------
// Seeded random inputs

/// A random rational with small numerator and a denominator from {1,2,3,5,7}.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t bound = 12) {
  static constexpr std::int64_t dens[] = {1, 2, 3, 5, 7};
  std::uniform_int_distribution<std::int64_t> num(-bound, bound);
  std::uniform_int_distribution<std::size_t> den(0, 4);
  return Rational(num(rng), dens[den(rng)]);
}

inline Rational random_integer(std::mt19937_64& rng, std::int64_t bound = 6) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  return Rational(d(rng));
}

/// A random weight whose coordinates are drawn by `coord`.
inline Weight random_weight(const RootSystem& rs, const std::function<Rational()>& coord) {
  Weight w = rs.zero();
  for (std::size_t k = 0; k < w.dim(); ++k) w[k] = Scalar(coord());
  return rs.canonical(w);
}

inline Weight random_rational_weight(const RootSystem& rs, std::mt19937_64& rng) {
  return random_weight(rs, [&] { return random_rational(rng); });
}

/// A random weight with integral coordinates in the basis pi (plus the
/// coordinates needed to fill the weight space, for rank-deficient cases).
inline Weight random_integral_weight(const RootSystem& rs, std::mt19937_64& rng, std::int64_t bound = 6) {
  Weight w = rs.zero();
  for (const auto& a : rs.simple) w += Scalar(random_integer(rng, bound)) * a;
  return rs.canonical(w);
}

/// Random strongly typical lambda, expressed by its lambda + rho. With
/// `non_generic`, the delta coordinates of lambda + rho are partly zeroed
/// (for the families where strongly typical characters can be non-generic);
/// the representative is then moved by a random Weyl element.
inline Weight random_strongly_typical(const RootSystem& rs, const WeylGroup& W, std::mt19937_64& rng,
                                      bool non_generic) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Weight v = random_rational_weight(rs, rng);
    if (non_generic) {
      std::uniform_int_distribution<std::size_t> count(1, rs.n_delta());
      const std::size_t zeros = count(rng);
      std::vector<std::size_t> idx(rs.n_delta());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      for (std::size_t z = 0; z < zeros; ++z) v[idx[z]] = Scalar(0);
    }
    const Weight lambda = v - rs.rho;
    if (!is_strongly_typical(lambda, rs)) continue;
    std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
    return dot(W[pick(rng)], lambda, rs.rho);
  }
  throw VerificationError("could not sample a strongly typical weight");
}

// ---------------------------------------------------------------------------
// Classical data

/// |W| from the classical order formulas.
inline std::size_t expected_weyl_order(const AlgebraId& id) {
  auto fact = [](std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= k; ++i) r *= i;
    return r;
  };
  auto signed_perm = [&](std::size_t k) { return (std::size_t{1} << k) * fact(k); };
  switch (id.family) {
    case Family::GL:
    case Family::SL: return fact(id.m) * fact(id.n);
    case Family::OSP_B: return signed_perm(id.n) * signed_perm(id.m);
    case Family::OSP_D: return signed_perm(id.n) * signed_perm(id.m) / 2;
    case Family::OSP_C: return signed_perm(id.n);
    case Family::D21A: return 8;
    case Family::F4: return 2 * 48;
    case Family::G3: return 2 * 12;
  }
  return 0;
}

/// The scalar p with rho_1 = p (delta_1 + ... + delta_n) for type II algebras.
inline Scalar expected_rho1_p(const AlgebraId& id) {
  switch (id.family) {
    case Family::OSP_B: return Scalar(static_cast<std::int64_t>(2 * id.m + 1), 2);
    case Family::OSP_D: return Scalar(static_cast<std::int64_t>(id.m));
    case Family::D21A: return Scalar(2);
    case Family::F4: return Scalar(2);
    case Family::G3: return Scalar(7, 2);
    default: throw DomainError("rho_1 is proportional to the delta sum only for type II algebras");
  }
}

// ---------------------------------------------------------------------------
// Property suite

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int random_samples = 20;
};

namespace detail {

inline std::string count_detail(std::size_t failures, std::size_t checks) {
  return std::to_string(failures) + " failures in " + std::to_string(checks) + " checks";
}

}  // namespace detail

/// Root-system invariants: isotropy, the rho identity on pi, rho_1 = p sum delta,
/// simple roots of Delta^+, positivity in N pi, gram shape.
inline std::vector<PropertyResult> rootdata_properties(const RootSystem& rs) {
  std::vector<PropertyResult> out;
  {
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (const auto& b : rs.all_roots()) {
      const auto info = *rs.find_root(b);
      const bool reduced = std::find(rs.reduced_odd.begin(), rs.reduced_odd.end(), info.positive ? b : -b) !=
                           rs.reduced_odd.end();
      ++checks;
      if (is_isotropic(b, rs) != (info.odd && reduced)) ++bad;
    }
    out.push_back({"isotropic roots are exactly the reduced odd roots", bad == 0, detail::count_detail(bad, checks)});
  }
  {
    std::size_t bad = 0;
    for (const auto& a : rs.simple) {
      if (Scalar(2) * rs.bilinear(a, rs.rho) != rs.bilinear(a, a)) ++bad;
    }
    out.push_back({"2(alpha,rho) = (alpha,alpha) on simple roots", bad == 0, detail::count_detail(bad, rs.simple.size())});
  }
  if (rs.id.is_type_two()) {
    Weight expect = rs.zero();
    for (std::size_t i = 0; i < rs.n_delta(); ++i) expect += expected_rho1_p(rs.id) * rs.delta(i);
    out.push_back({"rho_1 = p (delta_1 + ... + delta_n)", expect == rs.rho1, "rho_1 = " + rs.rho1.to_string()});
  }
  {
    const auto s = simple_roots(rs.positive_roots(), rs);
    std::unordered_set<Weight> a(s.begin(), s.end());
    std::unordered_set<Weight> b(rs.simple.begin(), rs.simple.end());
    out.push_back({"simple roots of Delta^+ equal pi", a == b && s.size() == rs.simple.size(),
                   std::to_string(s.size()) + " minimal elements"});
  }
  {
    std::size_t bad = 0;
    for (const auto& a : rs.positive_roots()) {
      if (!cone_index(a, rs)) ++bad;
    }
    out.push_back({"positive roots lie in N pi", bad == 0, detail::count_detail(bad, rs.positive_roots().size())});
  }
  {
    bool ok = true;
    for (std::size_t i = 0; i < rs.gram.size(); ++i) {
      for (std::size_t j = 0; j < rs.gram.size(); ++j) {
        if (rs.gram[i][j] != rs.gram[j][i]) ok = false;
        const bool both_eps = i >= rs.n_delta() && j >= rs.n_delta();
        if (i != j && !rs.gram[i][j].is_zero() && !(both_eps && rs.id.family == Family::G3)) ok = false;
      }
    }
    out.push_back({"gram is symmetric and orthogonal off the G(3) eps block", ok, ""});
  }
  return out;
}

/// Weyl group invariants.
inline std::vector<PropertyResult> weyl_properties(const RootSystem& rs, const WeylGroup& W, std::mt19937_64& rng,
                                                   const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  const std::size_t expect = expected_weyl_order(rs.id);
  out.push_back({"|W| matches the classical order", W.size() == expect,
                 std::to_string(W.size()) + " vs " + std::to_string(expect)});
  {
    std::size_t bad = 0;
    const auto roots = rs.all_roots();
    for (const auto& w : W) {
      for (const auto& a : roots) {
        if (!rs.is_root(rs.canonical(w.apply(a)))) ++bad;
      }
    }
    out.push_back({"W permutes the roots", bad == 0, detail::count_detail(bad, W.size() * roots.size())});
  }
  {
    std::size_t bad = 0;
    for (const auto& s : W.generators) bad += s.sign() == -1 ? 0 : 1;
    for (const auto& w : W) {
      for (const auto& s : W.generators) {
        const auto idx = W.index_of(s * w);
        if (!idx || W[*idx].sign() != -w.sign()) ++bad;
      }
    }
    out.push_back({"sn is a homomorphism with sn(s_alpha) = -1", bad == 0, detail::count_detail(bad, W.size())});
  }
  {
    std::size_t bad = 0;
    for (int k = 0; k < opt.random_samples; ++k) {
      const Weight mu = random_rational_weight(rs, rng);
      const Weight nu = random_rational_weight(rs, rng);
      for (const auto& w : W) {
        if (rs.bilinear(w.apply(mu), w.apply(nu)) != rs.bilinear(mu, nu)) ++bad;
      }
    }
    out.push_back({"W preserves the invariant form", bad == 0, detail::count_detail(bad, W.size() * opt.random_samples)});
  }
  {
    std::size_t bad = 0;
    const Weight lambda = random_rational_weight(rs, rng);
    for (const auto& w1 : W) {
      for (const auto& s : W.generators) {
        if (dot(s * w1, lambda, rs.rho) != dot(s, dot(w1, lambda, rs.rho), rs.rho)) ++bad;
        if (dot(s * w1, lambda, rs.rho0) != dot(s, dot(w1, lambda, rs.rho0), rs.rho0)) ++bad;
      }
    }
    out.push_back({"dot is a group action", bad == 0, detail::count_detail(bad, W.size() * W.generators.size() * 2)});
  }
  if (rs.id.is_type_two()) {
    std::size_t bad = 0;
    const std::size_t n = rs.n_delta();
    for (const auto& w : W) {
      for (std::size_t i = 0; i < w.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
          if ((i < n) != (j < n) && !w.entry(i, j).is_zero()) ++bad;
        }
      }
    }
    out.push_back({"W = W_1 x W_2 block decomposition", bad == 0, detail::count_detail(bad, W.size())});
  }
  return out;
}

/// Gamma-set invariants: star identity, the twisted dot identity, lattice classes.
inline std::vector<PropertyResult> gamma_properties(const RootSystem& rs, const WeylGroup& W, std::mt19937_64& rng,
                                                    const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  const auto gammas = enumerate_gamma(rs);
  {
    std::size_t bad = 0;
    for (const auto& w : W) {
      for (const auto& g : gammas) {
        if (star(w, g, rs).sum != rs.canonical(w.apply(g.sum - rs.rho1) + rs.rho1)) ++bad;
      }
    }
    out.push_back({"|w_* gamma| = w(|gamma| - rho_1) + rho_1", bad == 0, detail::count_detail(bad, W.size() * gammas.size())});
  }
  {
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (int k = 0; k < opt.random_samples; ++k) {
      const Weight lambda = random_rational_weight(rs, rng);
      std::uniform_int_distribution<std::size_t> pick_w(0, W.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_g(0, gammas.size() - 1);
      for (int t = 0; t < 16; ++t) {
        const auto& w = W[pick_w(rng)];
        const auto& g = gammas[pick_g(rng)];
        ++checks;
        if (dot(w, lambda, rs.rho) - star(w, g, rs).sum + rs.rho0 != rs.canonical(w.apply(lambda - g.sum + rs.rho0))) ++bad;
      }
    }
    out.push_back({"w.lambda - |w_* gamma| + rho0 = w(lambda - |gamma| + rho0)", bad == 0, detail::count_detail(bad, checks)});
  }
  if (rs.id.is_type_two()) {
    std::size_t bad = 0;
    const Scalar p2 = Scalar(2) * expected_rho1_p(rs.id);
    for (const auto& g : gammas) {
      bool all_zero = true;
      for (std::size_t i = 0; i < rs.n_delta(); ++i) {
        const Scalar s = g.sum.delta_coord(i);
        if (!s.is_zero()) all_zero = false;
        if (s.sign() < 0 || (s - p2).sign() > 0) ++bad;
      }
      if (all_zero != g.empty()) ++bad;
    }
    out.push_back({"0 <= |gamma|_delta <= 2p and gamma empty iff |gamma|_delta = 0", bad == 0,
                   detail::count_detail(bad, gammas.size())});
  }
  {
    std::size_t bad = 0;
    for (const auto& g : gammas) {
      const auto c = q_lattice_class(g.sum, rs);
      const auto expect = parity_class(g) == Parity::Even ? LatticeClass::Q0 : LatticeClass::Q1;
      if (c != expect) ++bad;
    }
    for (const auto& a : rs.even_pos) bad += q_lattice_class(a, rs) == LatticeClass::Q0 ? 0 : 1;
    for (const auto& w : W) {
      for (const auto& g : gammas) {
        if (q_lattice_class(w.apply(g.sum), rs) != q_lattice_class(g.sum, rs)) ++bad;
      }
    }
    out.push_back({"Q_0 / Q_1 classes follow gamma parity and are W-stable", bad == 0,
                   detail::count_detail(bad, gammas.size() * (W.size() + 1))});
  }
  {
    // prod (1 + e^{-beta}) = sum_gamma e^{-|gamma|} as exact multisets of exponents.
    std::unordered_map<Weight, std::int64_t> product{{rs.zero(), 1}};
    for (const auto& beta : rs.odd_pos) {
      std::unordered_map<Weight, std::int64_t> next = product;
      for (const auto& [mu, c] : product) next[mu - beta] += c;
      product = std::move(next);
    }
    std::unordered_map<Weight, std::int64_t> sum;
    for (const auto& g : gammas) sum[-g.sum] += 1;
    out.push_back({"prod (1 + e^-beta) = sum_gamma e^-|gamma|", product == sum,
                   std::to_string(sum.size()) + " distinct exponents"});
  }
  return out;
}

/// Typicality, Shapovalov and decomposition cross-checks.
inline std::vector<PropertyResult> verma_properties(const RootSystem& rs, const WeylGroup& W, std::mt19937_64& rng,
                                                    const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  {
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (int k = 0; k < opt.random_samples * 4; ++k) {
      const Weight lambda = random_integral_weight(rs, rng);
      if (!is_typical(lambda, rs)) continue;
      ++checks;
      if (is_dot_extremal(lambda, Extremum::Min, W, rs) && !is_verma_simple(lambda, rs)) ++bad;
    }
    out.push_back({"dot-minimal typical weights have simple Verma modules", bad == 0, detail::count_detail(bad, checks)});
  }
  {
    std::size_t bad = 0;
    for (int k = 0; k < opt.random_samples; ++k) {
      const Weight lambda = k % 2 == 0 ? random_integral_weight(rs, rng) : random_rational_weight(rs, rng);
      if (eval_t(lambda, rs).is_zero() == is_strongly_typical(lambda, rs)) ++bad;
    }
    out.push_back({"t(lambda) != 0 iff lambda strongly typical", bad == 0,
                   detail::count_detail(bad, static_cast<std::size_t>(opt.random_samples))});
  }
  {
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (int k = 0; k < opt.random_samples * 4 && checks < static_cast<std::size_t>(opt.random_samples); ++k) {
      const Weight lambda = k % 2 == 0 ? random_integral_weight(rs, rng) : random_rational_weight(rs, rng);
      if (!is_strongly_typical(lambda, rs) || !is_verma_simple(lambda, rs)) continue;
      ++checks;
      if (verma_decomposes(lambda, rs, W) != all_g0_factors_simple(lambda, rs)) ++bad;
    }
    out.push_back({"decomposition criterion agrees with simplicity of the even factors", bad == 0,
                   detail::count_detail(bad, checks)});
  }
  {
    std::size_t bad = 0;
    const std::size_t samples = 6;
    std::vector<Weight> pts;
    for (std::size_t k = 0; k < samples; ++k) pts.push_back(random_integral_weight(rs, rng, 2));
    for (const auto& a : pts) {
      if (!leq(a, a, rs)) ++bad;
      for (const auto& b : pts) {
        if (a != b && leq(a, b, rs) && leq(b, a, rs)) ++bad;
        for (const auto& c : pts) {
          if (leq(a, b, rs) && leq(b, c, rs) && !leq(a, c, rs)) ++bad;
        }
      }
    }
    out.push_back({"leq is a partial order", bad == 0, detail::count_detail(bad, samples * samples * samples)});
  }
  return out;
}

/// Borel enumeration, reflection and transport invariants.
inline std::vector<PropertyResult> borel_properties(const RootSystem& rs, std::mt19937_64& rng, const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  const auto graph = enumerate_borels(rs);
  {
    std::size_t bad = 0;
    for (const auto& b : graph.borels) {
      if (!is_closed(b, rs) || b.compute_rho(rs) != b.rho()) ++bad;
    }
    out.push_back({"every Borel is closed with consistent rho_b", bad == 0,
                   std::to_string(graph.borels.size()) + " Borels, " + std::to_string(bad) + " failures"});
  }
  {
    std::size_t bad = 0;
    std::size_t checks = 0;
    for (int k = 0; k < opt.random_samples; ++k) {
      const Weight lambda = random_rational_weight(rs, rng);
      if (!is_typical(lambda, rs)) continue;
      for (std::size_t to = 0; to < graph.borels.size(); ++to) {
        ++checks;
        const auto there = transport_weight(lambda, 0, to, graph, TransportMode::Verma, rs);
        // The way back runs along the reversed edges of the graph.
        const auto back_chain = graph.chain(to, 0);
        const auto home = transport_along(there.lambda, there.borel, back_chain, TransportMode::Verma, rs);
        if (home.lambda != rs.canonical(lambda)) ++bad;
        if (there.lambda + graph.borels[to].rho() != rs.canonical(lambda) + rs.rho) ++bad;
        if (is_typical(there.lambda, graph.borels[to], rs) != is_typical(lambda, rs)) ++bad;
        if (is_strongly_typical(there.lambda, graph.borels[to], rs) != is_strongly_typical(lambda, rs)) ++bad;
      }
    }
    out.push_back({"typical transport round-trips and preserves lambda + rho_b", bad == 0, detail::count_detail(bad, checks)});
  }
  return out;
}

/// The perfect-mate theorem on random strongly typical characters.
inline std::vector<PropertyResult> mate_properties(const RootSystem& rs, const WeylGroup& W, std::mt19937_64& rng,
                                                   const SuiteOptions& opt) {
  std::vector<PropertyResult> out;
  std::size_t bad = 0;
  std::size_t checks = 0;
  std::string first_failure;
  const bool can_be_non_generic =
      rs.id.family == Family::OSP_D || rs.id.family == Family::D21A || rs.id.family == Family::F4;
  for (int k = 0; k < opt.random_samples; ++k) {
    const bool non_generic = can_be_non_generic && k % 2 == 1;
    const Weight lambda = random_strongly_typical(rs, W, rng, non_generic);
    ++checks;
    try {
      const auto cert = find_perfect_mate(CentralCharacter{lambda}, rs, W);
      if (!cert.is_perfect) ++bad;
    } catch (const Error& e) {
      ++bad;
      if (first_failure.empty()) first_failure = std::string(": ") + lambda.to_string() + ": " + e.what();
    }
  }
  out.push_back({"strongly typical characters have a perfect mate", bad == 0,
                 detail::count_detail(bad, checks) + first_failure});
  return out;
}

/// Runs every property for one algebra.
inline std::vector<PropertyResult> run_invariant_suite(const RootSystem& rs, const SuiteOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  std::vector<PropertyResult> all;
  auto timed = [&](const std::function<std::vector<PropertyResult>()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto part = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (auto& p : part) {
      p.seconds = s / static_cast<double>(part.size());
      all.push_back(std::move(p));
    }
  };
  timed([&] { return rootdata_properties(rs); });
  const WeylGroup W = generate(rs);
  timed([&] { return weyl_properties(rs, W, rng, opt); });
  timed([&] { return gamma_properties(rs, W, rng, opt); });
  timed([&] { return verma_properties(rs, W, rng, opt); });
  timed([&] { return borel_properties(rs, rng, opt); });
  timed([&] { return mate_properties(rs, W, rng, opt); });
  return all;
}

}  // namespace superweyl

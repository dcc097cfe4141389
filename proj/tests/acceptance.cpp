// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Sample sizes, seeds and runtime bounds are fixed below.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "oracles.hpp"
#include "superweyl/invariants.hpp"
#include "superweyl/superweyl.hpp"

using namespace superweyl;

namespace {

constexpr std::uint64_t kSeed = 20240601;

constexpr double kCatalogSeconds = 1.0;
constexpr double kWeylSeconds = 5.0;
constexpr double kStarF4Seconds = 30.0;

constexpr int kTwistedDotSamples = 100;
constexpr int kMateSamples = 100;
constexpr int kLemmaTuples = 1000;
constexpr std::size_t kLemmaMaxLength = 4;
constexpr int kSimplicitySamples = 200;
constexpr int kDecompositionSamples = 200;
constexpr int kSamplingAttempts = 200000;
constexpr std::int64_t kCharacterDepth = 6;
constexpr int kTransportSamples = 10;

/// Outcome of one criterion; `detail` is printed after the verdict.
struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& where) {
    ++checks;
    if (ok) return;
    ++failures;
    passed = false;
    if (first_failure.empty()) first_failure = where;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int g_failed = 0;

/// Runs `body`, times it, and prints the verdict. A positive bound is part of
/// the criterion; exceptions count as failures.
void criterion(const std::string& name, double bound_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.passed = false;
    o.first_failure = std::string("exception: ") + e.what();
  }
  const double s = seconds_since(t0);
  const bool in_time = bound_seconds <= 0 || s < bound_seconds;
  const bool ok = o.passed && in_time;
  if (!ok) ++g_failed;
  char timing[96];
  if (bound_seconds > 0) {
    std::snprintf(timing, sizeof timing, "%.2f s, bound %.0f s", s, bound_seconds);
  } else {
    std::snprintf(timing, sizeof timing, "%.2f s", s);
  }
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << timing << "): " << o.failures << " failures in "
            << o.checks << " checks";
  const std::string extra = o.detail.str();
  if (!extra.empty()) std::cout << "; " << extra;
  if (!o.first_failure.empty()) std::cout << "; first failure: " << o.first_failure;
  if (!in_time) std::cout << "; runtime bound exceeded";
  std::cout << std::endl;
}

bool non_generic_family(const RootSystem& rs) {
  return rs.id.family == Family::OSP_D || rs.id.family == Family::D21A || rs.id.family == Family::F4;
}

/// Half-sum coefficient of rho_1 on the delta sum, from counting the odd
/// roots that involve each delta_i.
Scalar rho1_coefficient(const std::string& name) {
  if (name == "B(1,1)") return Scalar(3, 2);
  if (name == "B(2,2)") return Scalar(5, 2);
  if (name == "D(2,2)") return Scalar(2);
  if (name == "D(2,1,a)" || name == "D(2,1,a=3/2)") return Scalar(2);
  if (name == "F(4)") return Scalar(2);
  if (name == "G(3)") return Scalar(7, 2);
  throw DomainError("no rho_1 coefficient for " + name);
}

/// A random integral weight: alternately an integer combination of simple
/// roots, or integer coordinates in the delta/eps basis (the simple roots alone
/// span only the root lattice, which for gl(1,1) is entirely atypical).
Weight random_integral(const RootSystem& rs, std::mt19937_64& rng, int k) {
  if (k % 2 == 0) return random_integral_weight(rs, rng, 4);
  std::uniform_int_distribution<std::int64_t> c(-4, 4);
  Weight w = rs.zero();
  for (std::size_t i = 0; i < w.dim(); ++i) w[i] = Scalar(c(rng));
  return rs.canonical(w);
}

// ---------------------------------------------------------------------------

void catalog_fidelity(Outcome& o) {
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    for (const auto& p : rootdata_properties(rs)) o.check(p.passed, name + ": " + p.name + " " + p.detail);

    // Isotropy against "2 beta is not a root", with the root set rebuilt here.
    const auto roots = oracle::all_roots(rs);
    const auto reduced = oracle::to_set(rs.reduced_odd, rs);
    for (const auto& b : rs.odd_pos) {
      const bool isotropic = rs.bilinear(b, b).is_zero();
      const bool two_beta_root = roots.count(rs.canonical(Scalar(2) * b)) != 0;
      o.check(isotropic == !two_beta_root, name + ": isotropy of " + b.to_root_string());
      o.check(isotropic == (reduced.count(rs.canonical(b)) != 0), name + ": reduced odd " + b.to_root_string());
    }
    for (const auto& a : rs.simple) {
      o.check(Scalar(2) * rs.bilinear(a, rs.rho) == rs.bilinear(a, a), name + ": rho identity on " + a.to_root_string());
    }
    if (rs.id.is_type_two()) {
      Weight half = rs.zero();
      for (const auto& b : rs.odd_pos) half += b;
      half = rs.canonical(half * Scalar(1, 2));
      Weight expected = rs.zero();
      for (std::size_t i = 0; i < rs.n_delta(); ++i) expected += rs.delta(i);
      expected = rs.canonical(expected * rho1_coefficient(name));
      o.check(half == expected, name + ": rho_1 = p sum delta");
      o.check(rs.rho1 == expected, name + ": stored rho_1");
    }
  }
  o.detail << oracle::catalog().size() << " algebras";
}

void weyl_orders(Outcome& o) {
  const std::vector<std::size_t> expected = {4, 64, 32, 8, 8, 96, 24, 1, 2, 2, 2};
  std::ostringstream got;
  for (std::size_t i = 0; i < oracle::catalog().size(); ++i) {
    const auto& name = oracle::catalog()[i];
    const RootSystem rs = build_root_system(name);
    const std::size_t n = generate(rs).size();
    got << (i ? " " : "") << n;
    o.check(n == expected[i], name + ": |W| = " + std::to_string(n));
    o.check(n == oracle::weyl_order_formula(name), name + ": classical order formula");
  }
  o.detail << "orders " << got.str();
}

void star_identity(Outcome& o) {
  std::ostringstream f4_time;
  for (const std::string name : {"B(1,1)", "D(2,2)", "D(2,1,a)", "F(4)"}) {
    const auto t0 = std::chrono::steady_clock::now();
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    const auto gammas = enumerate_gamma(rs);
    for (const auto& w : W) {
      for (const auto& g : gammas) {
        const GammaSet img = star(w, g, rs);
        o.check(img.sum == rs.canonical(w(g.sum - rs.rho1) + rs.rho1), name + ": |w_* gamma| identity");
        o.check(oracle::to_set(img.members(rs), rs) == oracle::star_by_definition(w, g.members(rs), rs),
                name + ": w_* gamma against the definition");
      }
    }
    if (name == "F(4)") {
      const double s = seconds_since(t0);
      f4_time << "F(4) " << W.size() << "x" << gammas.size() << " pairs in " << s << " s";
      o.check(s < kStarF4Seconds, "F(4) exceeded its runtime bound");
    }
  }
  o.detail << f4_time.str();
}

void twisted_dot(Outcome& o) {
  std::mt19937_64 rng(kSeed + 4);
  for (const auto& name : oracle::type_two_catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    const auto gammas = enumerate_gamma(rs);
    // w_* gamma does not depend on lambda; compute each once.
    std::vector<std::vector<Weight>> star_sum(W.size());
    for (std::size_t i = 0; i < W.size(); ++i) {
      for (const auto& g : gammas) star_sum[i].push_back(star(W[i], g, rs).sum);
    }
    for (int k = 0; k < kTwistedDotSamples; ++k) {
      const Weight lambda = random_rational_weight(rs, rng);
      for (std::size_t i = 0; i < W.size(); ++i) {
        const Weight wl = dot(W[i], lambda, rs.rho);
        bool all = true;
        for (std::size_t j = 0; j < gammas.size() && all; ++j) {
          all = rs.canonical(wl - star_sum[i][j] + rs.rho0) == rs.canonical(W[i](lambda - gammas[j].sum + rs.rho0));
        }
        o.check(all, name + ": " + lambda.to_string());
      }
    }
  }
  o.detail << kTwistedDotSamples << " weights per type II algebra, every (w, gamma)";
}

/// Independent check of a mate certificate: gamma is the only subset whose
/// shifted weight lies in the W-orbit, and the stabilizer condition holds.
bool certificate_holds(const MateCertificate& cert, const RootSystem& rs, const WeylGroup& W,
                       const std::vector<GammaSet>& gammas) {
  const Weight point = rs.canonical(cert.lambda - cert.gamma.sum + rs.rho0);
  std::unordered_set<Weight> orbit_points;
  for (const auto& w : W) orbit_points.insert(rs.canonical(w(point)));
  std::size_t matches = 0;
  bool own = false;
  for (const auto& g : gammas) {
    if (orbit_points.count(rs.canonical(cert.lambda - g.sum + rs.rho0))) {
      ++matches;
      own = own || g == cert.gamma;
    }
  }
  const Weight v = rs.canonical(cert.lambda + rs.rho);
  bool contained = true;
  for (const auto& w : W) {
    if (rs.canonical(w(point)) == point && rs.canonical(w(v)) != v) contained = false;
  }
  return matches == 1 && own && contained;
}

void perfect_mates(Outcome& o) {
  std::mt19937_64 rng(kSeed + 5);
  std::size_t non_generic = 0;
  for (const auto& name : oracle::type_two_catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    const auto gammas = enumerate_gamma(rs);
    for (int k = 0; k < kMateSamples; ++k) {
      const Weight lambda = random_strongly_typical(rs, W, rng, non_generic_family(rs) && k % 2 == 1);
      if (!is_generic({lambda}, rs, W)) ++non_generic;
      try {
        const auto cert = find_perfect_mate({lambda}, rs, W);
        o.check(cert.is_perfect, name + ": " + lambda.to_string());
        o.check(CentralCharacter{cert.lambda}.same_as({lambda}, W, rs), name + ": representative leaves the orbit");
        o.check(certificate_holds(cert, rs, W, gammas), name + ": independent check of " + lambda.to_string());
      } catch (const VerificationError& e) {
        o.check(false, name + ": " + e.what());
      }
    }
  }
  struct Shifted {
    std::string algebra;
    std::string lambda_plus_rho;
    std::string expected;  // lambda - |gamma| + rho_0
  };
  const std::vector<Shifted> examples = {
      {"D(2,1,a)", "0;1,1", "0;3,1"}, {"D(2,2)", "3,0;2,1", "5,0;3,2"}, {"F(4)", "0;2,2,1", "0;3,3,2"}};
  for (const auto& ex : examples) {
    const RootSystem rs = build_root_system(ex.algebra);
    const WeylGroup W = generate(rs);
    const auto cert = find_perfect_mate({rs.parse_weight(ex.lambda_plus_rho) - rs.rho}, rs, W);
    const Weight shifted = rs.canonical(cert.mate_weight + rs.rho0);
    o.check(shifted == rs.parse_weight(ex.expected), ex.algebra + ": shifted weight " + shifted.to_string());
  }
  o.detail << kMateSamples << " characters per type II algebra, " << non_generic << " non-generic";
}

void nonsigned_lemma(Outcome& o) {
  std::mt19937_64 rng(kSeed + 6);
  auto positive = [&](std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> num(1, bound);
    std::uniform_int_distribution<std::int64_t> den(1, 6);
    return Rational(num(rng), den(rng));
  };
  std::size_t witnesses = 0;
  for (int k = 0; k < kLemmaTuples; ++k) {
    const std::size_t s = 1 + static_cast<std::size_t>(k) % kLemmaMaxLength;
    const Rational d = positive(8);
    std::vector<Rational> a(s);
    std::vector<Rational> x(s);
    for (std::size_t i = 0; i < s; ++i) {
      a[i] = positive(10);
      x[i] = a[i] + d;
    }
    // Three regimes: r aimed at a permutation of (a + d), r aimed at a signed
    // permutation, and r uniform in [0, 2d]; targets outside [0, 2d] are clamped.
    std::vector<std::size_t> perm(s);
    for (std::size_t i = 0; i < s; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Rational> r(s);
    for (std::size_t i = 0; i < s; ++i) {
      Rational ri;
      switch (k % 3) {
        case 0: ri = x[i] - x[perm[i]]; break;
        case 1: ri = x[i] + x[perm[i]]; break;
        default: ri = Rational(static_cast<std::int64_t>(rng() % 9), 4) * d; break;
      }
      if (ri.sign() < 0) ri = Rational(0);
      if (Rational(2) * d < ri) ri = Rational(2) * d;
      r[i] = ri;
    }
    std::vector<Rational> y(s);
    bool r_zero = true;
    for (std::size_t i = 0; i < s; ++i) {
      y[i] = x[i] - r[i];
      r_zero = r_zero && r[i].is_zero();
    }
    const auto m = oracle::signed_permutation_match(x, y);
    witnesses += m.any ? 1 : 0;
    o.check(!m.signed_one, "signed witness found");
    o.check(!m.any || r_zero, "witness with some r_i > 0");
    std::vector<Scalar> as;
    std::vector<Scalar> rs;
    for (std::size_t i = 0; i < s; ++i) {
      as.emplace_back(a[i]);
      rs.emplace_back(r[i]);
    }
    try {
      o.check(check_nonsigned(Scalar(d), as, rs) == m.any, "library disagrees with the search");
    } catch (const VerificationError& e) {
      o.check(false, e.what());
    }
  }
  o.detail << kLemmaTuples << " tuples with s <= " << kLemmaMaxLength << ", " << witnesses << " with a witness";
}

void simplicity_crosscheck(Outcome& o) {
  std::mt19937_64 rng(kSeed + 7);
  std::size_t minimal = 0;
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    int typical = 0;
    for (int attempt = 0; attempt < kSamplingAttempts && typical < kSimplicitySamples; ++attempt) {
      const Weight lambda = random_integral(rs, rng, attempt);
      if (!is_typical(lambda, rs)) continue;
      ++typical;
      if (!is_dot_extremal(lambda, Extremum::Min, W, rs)) continue;
      ++minimal;
      o.check(is_verma_simple(lambda, rs), name + ": " + lambda.to_string());
    }
    o.check(typical == kSimplicitySamples, name + ": too few typical samples");
  }
  o.detail << kSimplicitySamples << " typical weights per algebra, " << minimal << " dot-minimal";
}

void decomposition_criterion(Outcome& o) {
  std::mt19937_64 rng(kSeed + 8);
  std::size_t decomposing = 0;
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    int found = 0;
    for (int attempt = 0; attempt < kSamplingAttempts && found < kDecompositionSamples; ++attempt) {
      const Weight lambda =
          attempt % 2 == 0 ? random_integral_weight(rs, rng, 3) : random_rational_weight(rs, rng);
      if (!is_strongly_typical(lambda, rs) || !is_verma_simple(lambda, rs)) continue;
      ++found;
      const bool d = verma_decomposes(lambda, rs, W);
      decomposing += d ? 1 : 0;
      o.check(d == all_g0_factors_simple(lambda, rs), name + ": " + lambda.to_string());
      o.check(d == oracle::decomposes_by_pairs(lambda, rs, W), name + ": pair oracle at " + lambda.to_string());
    }
    o.check(found == kDecompositionSamples, name + ": too few samples");
  }
  o.detail << kDecompositionSamples << " weights per algebra, " << decomposing << " decomposing";
}

void character_oracle(Outcome& o) {
  for (const std::string name : {"B(1,1)", "gl(2,1)"}) {
    const RootSystem rs = build_root_system(name);
    for (const Weight& lambda : {rs.zero(), rs.rho, rs.canonical(Scalar(3) * rs.rho)}) {
      const auto product = verma_character(lambda, kCharacterDepth, rs);
      o.check(product == verma_character_by_filtration(lambda, kCharacterDepth, rs), name + ": filtration");
      o.check(product.coeffs() == oracle::verma_monomials(rs, kCharacterDepth), name + ": monomial oracle");
    }
  }
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    std::unordered_map<Weight, std::int64_t> by_gamma;
    for (const auto& g : enumerate_gamma(rs)) by_gamma[rs.canonical(-g.sum)] += 1;
    o.check(by_gamma == oracle::odd_product_expansion(rs), name + ": odd product identity");
  }
  o.detail << "depth " << kCharacterDepth;
}

void borel_transport(Outcome& o) {
  for (const std::string name : {"B(1,1)", "gl(1,1)", "D(2,1,a)"}) {
    const RootSystem rs = build_root_system(name);
    std::vector<std::vector<int>> signs;
    for (const auto& b : enumerate_borels(rs).borels) signs.push_back(b.signs());
    std::sort(signs.begin(), signs.end());
    o.check(signs == oracle::closed_signed_systems(rs), name + ": enumeration");
  }
  std::mt19937_64 rng(kSeed + 10);
  std::size_t chains = 0;
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    const BorelGraph g = enumerate_borels(rs);
    for (int k = 0; k < kTransportSamples; ++k) {
      Weight lambda = random_rational_weight(rs, rng);
      while (!is_typical(lambda, rs)) lambda = random_rational_weight(rs, rng);
      // Every Borel reached through every neighbour, then back along the reversed chain.
      for (std::size_t src = 0; src < g.borels.size(); ++src) {
        for (const auto& e : g.edges[src]) {
          auto chain = g.chain(0, src);
          chain.push_back(e.beta);
          ++chains;
          const auto there = transport_along(lambda, g.borels[0], chain, TransportMode::Verma, rs);
          o.check(there.borel == g.borels[e.target], name + ": chain lands elsewhere");
          o.check(there.lambda + there.borel.rho() == lambda + rs.rho, name + ": lambda + rho_b changed");
          std::vector<Weight> back;
          for (auto it = chain.rbegin(); it != chain.rend(); ++it) back.push_back(-*it);
          const auto home = transport_along(there.lambda, there.borel, back, TransportMode::Verma, rs);
          o.check(home.lambda == lambda && home.borel == g.borels[0], name + ": round trip");
        }
      }
    }
  }
  o.detail << chains << " chains";
}

}  // namespace

int main() {
  criterion("catalog-fidelity", kCatalogSeconds, catalog_fidelity);
  criterion("weyl-orders", kWeylSeconds, weyl_orders);
  criterion("star-action-identity", 0, star_identity);
  criterion("twisted-dot-identity", 0, twisted_dot);
  criterion("perfect-mates", 0, perfect_mates);
  criterion("nonsigned-permutation-lemma", 0, nonsigned_lemma);
  criterion("dot-minimal-implies-simple", 0, simplicity_crosscheck);
  criterion("decomposition-criterion", 0, decomposition_criterion);
  criterion("character-oracle", 0, character_oracle);
  criterion("borel-enumeration-and-transport", 0, borel_transport);
  std::cout << (g_failed == 0 ? "ALL PASS" : std::to_string(g_failed) + " FAILED") << std::endl;
  return g_failed == 0 ? 0 : 1;
}

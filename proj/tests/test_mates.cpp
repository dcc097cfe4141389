#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superweyl/invariants.hpp"
#include "superweyl/superweyl.hpp"

using namespace superweyl;

namespace {

Weight from_shifted(const RootSystem& rs, const std::string& shifted) { return rs.parse_weight(shifted) - rs.rho; }

std::vector<std::string> roots(const GammaSet& g, const RootSystem& rs) { return g.root_strings(rs); }

}  // namespace

TEST(Genericity, Examples) {
  const RootSystem b = build_root_system("B(1,1)");
  const WeylGroup Wb = generate(b);
  EXPECT_TRUE(is_generic({from_shifted(b, "2;1")}, b, Wb));
  const RootSystem d = build_root_system("D(2,2)");
  const WeylGroup Wd = generate(d);
  EXPECT_FALSE(is_generic({from_shifted(d, "3,0;2,1")}, d, Wd));
  const RootSystem a = build_root_system("D(2,1,a)");
  EXPECT_TRUE(is_generic({from_shifted(a, "1;1,0")}, a, generate(a)));
  const RootSystem gl = build_root_system("gl(2,1)");
  EXPECT_THROW(is_generic({gl.zero()}, gl, generate(gl)), DomainError);
}

TEST(Genericity, StronglyTypicalBAndGAreGeneric) {
  std::mt19937_64 rng(37);
  for (const std::string name : {"B(1,1)", "B(2,2)", "G(3)"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    for (int k = 0; k < 30; ++k) {
      const Weight lambda = random_strongly_typical(rs, W, rng, false);
      EXPECT_TRUE(is_generic({lambda}, rs, W)) << name;
    }
  }
}

TEST(Genericity, IsOrbitInvariant) {
  std::mt19937_64 rng(41);
  for (const std::string name : {"D(2,2)", "D(2,1,a)", "F(4)"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    for (bool non_generic : {false, true}) {
      const Weight lambda = random_strongly_typical(rs, W, rng, non_generic);
      const bool g = is_generic({lambda}, rs, W);
      for (const auto& mu : orbit(lambda, rs.rho, W)) EXPECT_EQ(is_generic({mu}, rs, W), g) << name;
    }
  }
}

TEST(DominantRep, Examples) {
  const RootSystem b = build_root_system("B(1,1)");
  const WeylGroup Wb = generate(b);
  EXPECT_EQ(dominant_rep({from_shifted(b, "-2;1")}, b, Wb) + b.rho, b.parse_weight("2;1"));
  EXPECT_EQ(dominant_rep({from_shifted(b, "2;1")}, b, Wb) + b.rho, b.parse_weight("2;1"));

  const RootSystem d = build_root_system("D(2,2)");
  const WeylGroup Wd = generate(d);
  EXPECT_EQ(dominant_rep({from_shifted(d, "0,3;-1,-2")}, d, Wd) + d.rho, d.parse_weight("3,0;2,1"));
  // One eps sign change cannot be undone: l_m keeps the sign of the product.
  EXPECT_EQ(dominant_rep({from_shifted(d, "0,3;1,-2")}, d, Wd) + d.rho, d.parse_weight("3,0;2,-1"));
}

TEST(DominantRep, LandsInTheOrbit) {
  std::mt19937_64 rng(43);
  for (const auto& name : oracle::type_two_catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    const bool can_be_non_generic = rs.id.family == Family::OSP_D || rs.id.family == Family::D21A || rs.id.family == Family::F4;
    for (int k = 0; k < 10; ++k) {
      const Weight lambda = random_strongly_typical(rs, W, rng, can_be_non_generic && k % 2 == 1);
      const Weight rep = dominant_rep({lambda}, rs, W);
      const auto members = oracle::to_set(orbit(lambda, rs.rho, W), rs);
      EXPECT_TRUE(members.count(rep)) << name;
      EXPECT_EQ(dominant_rep({rep}, rs, W), rep) << name;
    }
  }
}

TEST(GammaD, ClosedFormExamples) {
  const RootSystem a = build_root_system("D(2,1,a)");
  const Weight la = from_shifted(a, "0;1,1");
  const GammaSet ga = gamma_d(la, a);
  EXPECT_EQ(roots(ga, a), (std::vector<std::string>{"d1-e1+e2", "d1-e1-e2"}));
  EXPECT_EQ(la - ga.sum + a.rho0, a.parse_weight("0;3,1"));

  const RootSystem d = build_root_system("D(2,2)");
  const Weight ld = from_shifted(d, "3,0;2,1");
  const GammaSet gd = gamma_d(ld, d);
  EXPECT_EQ(roots(gd, d), (std::vector<std::string>{"d2-e1", "d2-e2"}));
  EXPECT_EQ(ld - gd.sum + d.rho0, d.parse_weight("5,0;3,2"));

  const RootSystem f = build_root_system("F(4)");
  const Weight lf = from_shifted(f, "0;2,2,1");
  const GammaSet gf = gamma_d(lf, f);
  EXPECT_EQ(gf.size(), 4U);
  EXPECT_EQ(gf.sum, f.parse_weight("2;-1,-1,-1"));
  EXPECT_EQ(lf - gf.sum + f.rho0, f.parse_weight("0;3,3,2"));
}

TEST(GammaD, VariantsOfTheRecipes) {
  // D(2,1,a) with l1 = 0: the roles of eps1 and eps2 are exchanged.
  const RootSystem a = build_root_system("D(2,1,a=3/2)");
  const GammaSet g = gamma_d(from_shifted(a, "0;0,1"), a);
  EXPECT_EQ(roots(g, a), (std::vector<std::string>{"d1+e1-e2", "d1-e1-e2"}));
  // F(4) with l1 > l2.
  const RootSystem f = build_root_system("F(4)");
  const GammaSet gf = gamma_d(from_shifted(f, "0;3,1,1"), f);
  EXPECT_EQ(gf.sum, f.parse_weight("2;-2,0,0"));
  // D(2,2) with negative l_m.
  const RootSystem d = build_root_system("D(2,2)");
  const GammaSet gd = gamma_d(from_shifted(d, "3,0;2,-1"), d);
  EXPECT_EQ(roots(gd, d), (std::vector<std::string>{"d2+e2", "d2-e1"}));
}

TEST(GammaD, GenericIsEmptyAndErrors) {
  const RootSystem b = build_root_system("B(1,1)");
  EXPECT_TRUE(gamma_d(from_shifted(b, "2;1"), b).empty());
  EXPECT_THROW(gamma_d(from_shifted(b, "0;1"), b), DomainError);    // not strongly typical
  const RootSystem d = build_root_system("D(2,2)");
  EXPECT_THROW(gamma_d(from_shifted(d, "0,3;2,1"), d), DomainError);  // not in normal form
  EXPECT_THROW(gamma_d(from_shifted(d, "-3,1;2,1"), d), DomainError);
}

TEST(VerifyMate, D21AExample) {
  const RootSystem rs = build_root_system("D(2,1,a)");
  const WeylGroup W = generate(rs);
  const Weight lambda = from_shifted(rs, "0;1,1");
  const auto good = verify_mate(lambda, gamma_d(lambda, rs), rs, W);
  EXPECT_TRUE(good.is_mate);
  EXPECT_TRUE(good.is_perfect);
  const auto bad = verify_mate(lambda, make_gamma(0, rs), rs, W);
  EXPECT_FALSE(bad.is_mate);
  EXPECT_FALSE(bad.is_perfect);
  ASSERT_TRUE(bad.witnesses.gamma_prime.has_value());
  ASSERT_TRUE(bad.witnesses.w_index.has_value());
  EXPECT_EQ(rs.canonical(W[*bad.witnesses.w_index](lambda + rs.rho0)),
            rs.canonical(lambda - bad.witnesses.gamma_prime->sum + rs.rho0));
}

TEST(VerifyMate, GenericB11) {
  const RootSystem rs = build_root_system("B(1,1)");
  const WeylGroup W = generate(rs);
  const auto cert = verify_mate(from_shifted(rs, "2;1"), make_gamma(0, rs), rs, W);
  EXPECT_TRUE(cert.is_mate);
  EXPECT_TRUE(cert.is_perfect);
}

TEST(VerifyMate, MateGammaIsTheUniqueOrbitMatch) {
  std::mt19937_64 rng(47);
  for (const std::string name : {"D(2,1,a)", "D(2,2)", "B(1,1)"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    for (int k = 0; k < 5; ++k) {
      const auto cert = find_perfect_mate({random_strongly_typical(rs, W, rng, k % 2 == 1 && name != "B(1,1)")}, rs, W);
      const Weight point = cert.mate_weight + rs.rho0;
      std::size_t matches = 0;
      for (const auto& g : enumerate_gamma(rs)) {
        const Weight p = cert.lambda - g.sum + rs.rho0;
        bool in_orbit = false;
        for (const auto& w : W) in_orbit = in_orbit || rs.canonical(w(point)) == rs.canonical(p);
        matches += in_orbit ? 1 : 0;
      }
      EXPECT_EQ(matches, 1U) << name;
    }
  }
}

TEST(FindPerfectMate, RandomCharacters) {
  std::mt19937_64 rng(53);
  for (const auto& name : oracle::type_two_catalog()) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    const bool can_be_non_generic = rs.id.family == Family::OSP_D || rs.id.family == Family::D21A || rs.id.family == Family::F4;
    for (int k = 0; k < 8; ++k) {
      const Weight lambda = random_strongly_typical(rs, W, rng, can_be_non_generic && k % 2 == 1);
      const auto cert = find_perfect_mate({lambda}, rs, W);
      EXPECT_TRUE(cert.is_perfect) << name;
      EXPECT_TRUE(CentralCharacter{cert.lambda}.same_as({lambda}, W, rs)) << name;
    }
  }
}

TEST(FindPerfectMate, TypeOneUsesEmptyGamma) {
  std::mt19937_64 rng(59);
  for (const std::string name : {"gl(1,1)", "gl(2,1)", "sl(2,1)", "osp(2,2)"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    for (int k = 0; k < 10; ++k) {
      const Weight lambda = random_strongly_typical(rs, W, rng, false);
      const auto cert = find_perfect_mate({lambda}, rs, W);
      EXPECT_TRUE(cert.gamma.empty()) << name;
      EXPECT_TRUE(cert.is_perfect) << name;
    }
  }
}

TEST(FindPerfectMate, RejectsAtypical) {
  const RootSystem rs = build_root_system("B(1,1)");
  EXPECT_THROW(find_perfect_mate({from_shifted(rs, "0;1")}, rs, generate(rs)), DomainError);
}

TEST(Nonsigned, ExamplesAndErrors) {
  EXPECT_TRUE(check_nonsigned(Scalar(1), {Scalar(2), Scalar(3)}, {Scalar(0), Scalar(0)}));
  EXPECT_THROW(check_nonsigned(Scalar(1), {Scalar(2)}, {Scalar(3)}), DomainError);  // r > 2d
  EXPECT_THROW(check_nonsigned(Scalar(0), {Scalar(2)}, {Scalar(0)}), DomainError);
  EXPECT_THROW(check_nonsigned(Scalar(1), {Scalar(-2)}, {Scalar(0)}), DomainError);
  // (a + d) = (2, 3) with r = (0, 1) gives (2, 2): no signed permutation reaches it.
  EXPECT_FALSE(check_nonsigned(Scalar(1), {Scalar(1), Scalar(2)}, {Scalar(0), Scalar(1)}));
  EXPECT_FALSE(check_nonsigned(Scalar(1), {Scalar(1), Scalar(2)}, {Scalar(1), Scalar(0)}));
}

TEST(Nonsigned, AgreesWithIndependentSearch) {
  std::mt19937_64 rng(61);
  for (int k = 0; k < 200; ++k) {
    const std::size_t s = 1 + k % 4;
    const Rational d = Rational(1 + static_cast<std::int64_t>(rng() % 6), 1 + static_cast<std::int64_t>(rng() % 3));
    std::vector<Scalar> a;
    std::vector<Scalar> r;
    std::vector<Rational> x;
    std::vector<Rational> y;
    for (std::size_t i = 0; i < s; ++i) {
      const Rational ai(1 + static_cast<std::int64_t>(rng() % 5), 1 + static_cast<std::int64_t>(rng() % 2));
      a.push_back(Scalar(ai));
      x.push_back(ai + d);
    }
    // Half of the samples steer r towards a permutation of (a + d).
    for (std::size_t i = 0; i < s; ++i) {
      Rational ri = (k % 2 == 0) ? x[i] - x[(i + 1) % s] : Rational(static_cast<std::int64_t>(rng() % 5), 2) * d;
      if (ri.sign() < 0 || Rational(2) * d < ri) ri = Rational(0);
      r.push_back(Scalar(ri));
      y.push_back(x[i] - ri);
    }
    const auto m = oracle::signed_permutation_match(x, y);
    EXPECT_FALSE(m.signed_one);
    EXPECT_EQ(check_nonsigned(Scalar(d), a, r), m.any);
  }
}

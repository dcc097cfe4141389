#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superweyl/invariants.hpp"
#include "superweyl/superweyl.hpp"

using namespace superweyl;

namespace {

/// Searches small integral weights for a strongly typical one whose truncated
/// typical character has no negative coefficient.
std::optional<Weight> positivity_scan(const RootSystem& rs, const WeylGroup& W, std::int64_t depth) {
  for (std::int64_t a = 1; a <= 6; ++a) {
    for (std::int64_t b = 0; b <= 6; ++b) {
      const Weight lambda = rs.canonical(Scalar(a) * rs.delta(0) + Scalar(b) * rs.eps(0));
      if (!is_strongly_typical(lambda, rs)) continue;
      if (typical_character(lambda, depth, rs, W).all_nonnegative()) return lambda;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST(FormalCharacter, TruncatesAndAdds) {
  const RootSystem rs = build_root_system("B(1,1)");
  FormalCharacter c = FormalCharacter::unit(rs.zero(), 2, 2);
  c.add({3, 0}, 5);
  EXPECT_EQ(c.at({3, 0}), 0);
  c.add({1, 1}, 2);
  c.add({1, 1}, -2);
  EXPECT_EQ(c.coeffs().size(), 1U);
  EXPECT_THROW(FormalCharacter(rs.zero(), -1, 2), DomainError);
  EXPECT_THROW(c.multiply_geometric({0, 0}), DomainError);
  FormalCharacter other = FormalCharacter::unit(rs.delta(0), 2, 2);
  EXPECT_THROW(c += other, DomainError);
}

TEST(FormalCharacter, GeometricSeries) {
  const RootSystem rs = build_root_system("B(1,1)");
  FormalCharacter c = FormalCharacter::unit(rs.zero(), 4, 2);
  c.multiply_geometric({1, 0});
  for (std::int64_t k = 0; k <= 4; ++k) EXPECT_EQ(c.at({k, 0}), 1);
  EXPECT_EQ(c.coeffs().size(), 5U);
}

TEST(VermaCharacter, Gl11) {
  const RootSystem rs = build_root_system("gl(1,1)");
  const FormalCharacter ch = verma_character(rs.zero(), 3, rs);
  EXPECT_EQ(ch.coeffs().size(), 2U);
  EXPECT_EQ(weight_multiplicity(ch, rs.zero(), rs), 1);
  EXPECT_EQ(weight_multiplicity(ch, rs.zero() - rs.parse_root("e1-d1"), rs), 1);
  EXPECT_EQ(weight_multiplicity(ch, rs.parse_weight("1;0"), rs), 0);  // outside the cone
}

TEST(VermaCharacter, B11AgainstMonomialOracle) {
  const RootSystem rs = build_root_system("B(1,1)");
  const FormalCharacter ch = verma_character(rs.zero(), 2, rs);
  const auto expected = oracle::verma_monomials(rs, 2);
  EXPECT_EQ(ch.coeffs(), expected);
  // d1 = (d1 - e1) + e1 is reached by gamma = {d1} and by gamma = {d1 - e1} with one e1.
  EXPECT_EQ(weight_multiplicity(ch, rs.parse_weight("-1;0"), rs), 2);
}

TEST(VermaCharacter, LeadingTermAndDepthGuard) {
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    const Weight lambda = rs.rho0;
    const FormalCharacter ch = verma_character(lambda, 2, rs);
    EXPECT_EQ(weight_multiplicity(ch, lambda, rs), 1) << name;
    EXPECT_TRUE(ch.all_nonnegative()) << name;
    const Weight far = lambda - Scalar(3) * rs.simple[0];
    EXPECT_THROW(weight_multiplicity(ch, far, rs), DomainError) << name;
  }
}

TEST(VermaCharacter, ProductEqualsFiltration) {
  for (const std::string name : {"B(1,1)", "gl(2,1)", "D(2,1,a)", "osp(2,2)", "G(3)"}) {
    const RootSystem rs = build_root_system(name);
    const Weight lambda = rs.parse_weight(rs.rho.to_string());
    const std::int64_t depth = name == "G(3)" ? 3 : 5;
    EXPECT_EQ(verma_character(lambda, depth, rs), verma_character_by_filtration(lambda, depth, rs)) << name;
    EXPECT_EQ(verma_character(lambda, depth, rs).coeffs(), oracle::verma_monomials(rs, depth)) << name;
  }
}

TEST(VermaCharacter, OddProductIdentity) {
  for (const auto& name : oracle::catalog()) {
    const RootSystem rs = build_root_system(name);
    std::unordered_map<Weight, std::int64_t> by_gamma;
    for (const auto& g : enumerate_gamma(rs)) by_gamma[rs.canonical(-g.sum)] += 1;
    EXPECT_EQ(by_gamma, oracle::odd_product_expansion(rs)) << name;
  }
}

TEST(TypicalCharacter, Gl11EqualsVerma) {
  const RootSystem rs = build_root_system("gl(1,1)");
  const WeylGroup W = generate(rs);
  const Weight lambda = rs.parse_weight("2;1");
  ASSERT_TRUE(is_typical(lambda, rs));
  EXPECT_EQ(typical_character(lambda, 4, rs, W), verma_character(lambda, 4, rs));
  EXPECT_THROW(typical_character(rs.zero(), 4, rs, W), DomainError);
}

TEST(TypicalCharacter, B11PositivityScan) {
  const RootSystem rs = build_root_system("B(1,1)");
  const WeylGroup W = generate(rs);
  const std::int64_t depth = 8;
  const auto lambda = positivity_scan(rs, W, depth);
  ASSERT_TRUE(lambda.has_value());
  const FormalCharacter ch = typical_character(*lambda, depth, rs, W);
  EXPECT_EQ(weight_multiplicity(ch, *lambda, rs), 1);
  EXPECT_TRUE(ch.all_nonnegative());
  // Support is W-invariant wherever the whole orbit lies within the truncation.
  for (const auto& [nu, c] : ch.coeffs()) {
    const Weight mu = cone_weight(ch, nu, rs);
    bool orbit_inside = true;
    for (const auto& w : W) {
      const auto idx = cone_index(*lambda - w(mu), rs);
      orbit_inside = orbit_inside && idx && height(*idx) <= depth;
    }
    if (!orbit_inside) continue;
    for (const auto& w : W) EXPECT_NE(weight_multiplicity(ch, w(mu), rs), 0) << mu.to_string();
  }
}

TEST(TypicalCharacter, LeadingCoefficientIsOne) {
  std::mt19937_64 rng(67);
  for (const std::string name : {"B(1,1)", "D(2,1,a=3/2)", "gl(2,1)", "osp(2,2)"}) {
    const RootSystem rs = build_root_system(name);
    const WeylGroup W = generate(rs);
    for (int k = 0; k < 5; ++k) {
      const Weight lambda = random_integral_weight(rs, rng, 4);
      if (!is_typical(lambda, rs)) continue;
      EXPECT_EQ(weight_multiplicity(typical_character(lambda, 3, rs, W), lambda, rs), 1) << name;
    }
  }
}

#pragma once

#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <string_view>

#include "superweyl/scalar.hpp"

namespace superweyl {

enum class Family {
  GL,      // gl(m,n)
  SL,      // sl(m,n), modeled in gl coordinates
  OSP_B,   // B(m,n) = osp(2m+1,2n)
  OSP_D,   // D(m,n) = osp(2m,2n), m >= 2
  OSP_C,   // osp(2,2n)
  D21A,    // D(2,1,alpha)
  F4,
  G3,
};

/// Which basic classical Lie superalgebra; `m` counts eps coordinates and
/// `n` counts delta coordinates.
struct AlgebraId {
  Family family = Family::GL;
  std::size_t m = 1;
  std::size_t n = 1;
  /// D(2,1,alpha) only: rational parameter, or nullopt for the formal symbol.
  std::optional<Rational> alpha;

  [[nodiscard]] bool is_type_one() const {
    return family == Family::GL || family == Family::SL || family == Family::OSP_C;
  }
  [[nodiscard]] bool is_type_two() const { return !is_type_one(); }

  /// Value to substitute for `a` when reading weights of this algebra.
  [[nodiscard]] std::optional<Rational> alpha_substitution() const {
    return family == Family::D21A ? alpha : std::nullopt;
  }

  /// The parameter as a field element (formal `a` when not fixed).
  [[nodiscard]] Scalar alpha_scalar() const { return alpha ? Scalar(*alpha) : Scalar::alpha(); }

  [[nodiscard]] std::string to_string() const {
    auto pair = [&](const char* name) {
      return std::string(name) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    };
    switch (family) {
      case Family::GL: return pair("gl");
      case Family::SL: return pair("sl");
      case Family::OSP_B: return pair("B");
      case Family::OSP_D: return pair("D");
      case Family::OSP_C: return "osp(2," + std::to_string(2 * n) + ")";
      case Family::D21A: return alpha ? "D(2,1,a=" + alpha->to_string() + ")" : "D(2,1,a)";
      case Family::F4: return "F(4)";
      case Family::G3: return "G(3)";
    }
    return "?";
  }

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

/// Parses "B(m,n)", "D(m,n)", "D(2,1,a)", "D(2,1,a=3/2)", "F(4)", "G(3)",
/// "gl(m,n)", "sl(m,n)", "osp(2,2n)". Throws ParseError on bad syntax and
/// DomainError on unsupported ranks.
inline AlgebraId parse_algebra(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  std::smatch mt;
  static const std::regex pair_re(R"(^(gl|sl|B|D|osp)\((\d+),(\d+)\)$)");
  static const std::regex d21_re(R"(^D\(2,1,a(=([^)]+))?\)$)");
  AlgebraId id;
  if (s == "F(4)") {
    id.family = Family::F4;
    id.m = 3;
    id.n = 1;
    return id;
  }
  if (s == "G(3)") {
    id.family = Family::G3;
    id.m = 3;
    id.n = 1;
    return id;
  }
  if (std::regex_match(s, mt, d21_re)) {
    id.family = Family::D21A;
    id.m = 2;
    id.n = 1;
    if (mt[2].matched) {
      const Scalar a = parse_scalar(mt[2].str());
      if (!a.is_rational()) throw ParseError("alpha must be rational in '" + s + "'");
      if (a.is_zero() || a == Scalar(-1)) throw DomainError("D(2,1,alpha) is degenerate for alpha in {0,-1}");
      id.alpha = a.rational();
    }
    return id;
  }
  if (!std::regex_match(s, mt, pair_re)) throw ParseError("unrecognized algebra '" + std::string(text) + "'");
  const std::string fam = mt[1].str();
  const auto first = static_cast<std::size_t>(std::stoul(mt[2].str()));
  const auto second = static_cast<std::size_t>(std::stoul(mt[3].str()));
  if (fam == "osp") {
    if (first != 2 || second == 0 || second % 2 != 0) {
      throw DomainError("only osp(2,2n) with n >= 1 is supported as a type I orthosymplectic algebra");
    }
    id.family = Family::OSP_C;
    id.m = 1;
    id.n = second / 2;
    return id;
  }
  if (first == 0 || second == 0) throw DomainError("rank parameters must be positive in '" + s + "'");
  id.m = first;
  id.n = second;
  if (fam == "gl") id.family = Family::GL;
  else if (fam == "sl") id.family = Family::SL;
  else if (fam == "B") id.family = Family::OSP_B;
  else {
    if (first < 2) throw DomainError("D(m,n) requires m >= 2 (D(1,n) is osp(2,2n))");
    id.family = Family::OSP_D;
  }
  return id;
}

}  // namespace superweyl

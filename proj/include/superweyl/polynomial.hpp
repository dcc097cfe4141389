#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "superweyl/rational.hpp"

namespace superweyl {

/// Univariate polynomial with rational coefficients in the formal parameter `a`.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(constant);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial `a`.
  static Polynomial variable() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; the zero polynomial reports -1.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] Rational constant_term() const { return coeffs_.empty() ? Rational() : coeffs_.front(); }
  [[nodiscard]] Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) + q.coeff(i);
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) - q.coeff(i);
    return Polynomial(std::move(c));
  }
  Polynomial operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (p.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& s) {
    if (s.is_zero()) return {};
    std::vector<Rational> c(p.coeffs_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  /// Euclidean division: returns (quotient, remainder) with deg remainder < deg divisor.
  [[nodiscard]] std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> rem(coeffs_);
    const int dd = divisor.degree();
    if (degree() < dd) return {Polynomial(), *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational lead = divisor.leading();
    for (int k = degree() - dd; k >= 0; --k) {
      const Rational f = rem[static_cast<std::size_t>(k + dd)] / lead;
      quot[static_cast<std::size_t>(k)] = f;
      if (f.is_zero()) continue;
      for (int j = 0; j <= dd; ++j) {
        rem[static_cast<std::size_t>(k + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
      }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// Scaled to leading coefficient 1 (zero stays zero).
  [[nodiscard]] Polynomial monic() const {
    if (is_zero()) return {};
    return *this * (Rational(1) / leading());
  }

  /// Monic greatest common divisor.
  static Polynomial gcd(Polynomial p, Polynomial q) {
    while (!q.is_zero()) {
      Polynomial r = p.divmod(q).second;
      p = std::move(q);
      q = std::move(r);
    }
    return p.monic();
  }

  [[nodiscard]] Rational evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

  /// Total order on coefficient lists; not compatible with arithmetic.
  friend bool structural_less(const Polynomial& p, const Polynomial& q) {
    if (p.coeffs_.size() != q.coeffs_.size()) return p.coeffs_.size() < q.coeffs_.size();
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
      if (p.coeffs_[i] != q.coeffs_[i]) return p.coeffs_[i] < q.coeffs_[i];
    }
    return false;
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = coeffs_.size();
    for (const auto& c : coeffs_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// Renders e.g. "1+2a", "-a^2+1/2*a". The output re-parses to the same value.
  [[nodiscard]] std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string term;
      const Rational mag = c.abs();
      if (k == 0) {
        term = mag.to_string();
      } else {
        if (mag != Rational(1)) term = mag.is_integer() ? mag.to_string() : mag.to_string() + "*";
        term += "a";
        if (k > 1) term += "^" + std::to_string(k);
      }
      if (c.sign() < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace superweyl

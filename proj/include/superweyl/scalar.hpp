#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "superweyl/polynomial.hpp"

namespace superweyl {

/// Exact element of the field Q(a): either a rational number or a reduced
/// ratio of polynomials in the formal parameter `a`.
///
/// The representation is canonical (gcd-free, monic denominator, and a
/// value with constant numerator and denominator is always held as a plain
/// Rational), so structural equality is field equality.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational q) : value_(q) {}                                   // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t v) : value_(Rational(v)) {}                     // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}                              // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t num, std::int64_t den) : value_(Rational(num, den)) {}

  /// num/den reduced to canonical form.
  static Scalar fraction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DomainError("division by zero");
    if (num.is_zero()) return {};
    if (den.is_constant()) {
      if (num.is_constant()) return Scalar(num.constant_term() / den.constant_term());
      return from_parts(num * (Rational(1) / den.constant_term()), Polynomial(Rational(1)));
    }
    const Polynomial g = Polynomial::gcd(num, den);
    Polynomial n = num.divmod(g).first;
    Polynomial d = den.divmod(g).first;
    const Rational lead = d.leading();
    n = n * (Rational(1) / lead);
    d = d * (Rational(1) / lead);
    if (d.is_constant() && n.is_constant()) return Scalar(n.constant_term() / d.constant_term());
    return from_parts(std::move(n), std::move(d));
  }

  /// The formal parameter itself.
  static Scalar alpha() { return from_parts(Polynomial::variable(), Polynomial(Rational(1))); }

  [[nodiscard]] bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  [[nodiscard]] bool is_zero() const { return is_rational() && std::get<Rational>(value_).is_zero(); }

  /// The rational value; throws DomainError when the scalar depends on `a`.
  [[nodiscard]] const Rational& rational() const {
    if (!is_rational()) throw DomainError("scalar " + to_string() + " is not rational-valued");
    return std::get<Rational>(value_);
  }

  /// Sign of a rational-valued scalar (throws otherwise: Q(a) carries no order).
  [[nodiscard]] int sign() const { return rational().sign(); }

  /// Integrality in the generic-parameter sense: a non-rational value is never an integer.
  [[nodiscard]] bool is_integer() const { return is_rational() && std::get<Rational>(value_).is_integer(); }
  [[nodiscard]] bool is_positive_integer() const { return is_integer() && std::get<Rational>(value_).sign() > 0; }

  [[nodiscard]] Polynomial numerator() const {
    if (is_rational()) return Polynomial(std::get<Rational>(value_));
    return std::get<RatFun>(value_).num;
  }
  [[nodiscard]] Polynomial denominator() const {
    if (is_rational()) return Polynomial(Rational(1));
    return std::get<RatFun>(value_).den;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return Scalar(x.q() + y.q());
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    return fraction(x.num_poly() * y.den_poly() + y.num_poly() * x.den_poly(), x.den_poly() * y.den_poly());
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return Scalar(x.q() - y.q());
    return x + (-y);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.is_rational() && y.is_rational()) return Scalar(x.q() * y.q());
    if (x.is_zero() || y.is_zero()) return {};
    return fraction(x.num_poly() * y.num_poly(), x.den_poly() * y.den_poly());
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (y.is_zero()) throw DomainError("division by zero");
    if (x.is_rational() && y.is_rational()) return Scalar(x.q() / y.q());
    return fraction(x.num_poly() * y.den_poly(), x.den_poly() * y.num_poly());
  }
  Scalar operator-() const {
    if (is_rational()) return Scalar(-q());
    const auto& rf = std::get<RatFun>(value_);
    return from_parts(-rf.num, rf.den);
  }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& x, const Scalar& y) = default;

  /// Arbitrary but fixed total order, usable for canonical keys only.
  friend bool structural_less(const Scalar& x, const Scalar& y) {
    if (x.value_.index() != y.value_.index()) return x.value_.index() < y.value_.index();
    if (x.is_rational()) return x.q() < y.q();
    const auto& a = std::get<RatFun>(x.value_);
    const auto& b = std::get<RatFun>(y.value_);
    if (a.num != b.num) return structural_less(a.num, b.num);
    return structural_less(a.den, b.den);
  }

  /// Substitutes a rational value for `a` (must not hit a pole).
  [[nodiscard]] Scalar evaluate_at(const Rational& a) const {
    if (is_rational()) return *this;
    const auto& rf = std::get<RatFun>(value_);
    return Scalar(rf.num.evaluate(a) / rf.den.evaluate(a));
  }

  [[nodiscard]] std::size_t hash() const {
    if (is_rational()) return q().hash();
    const auto& rf = std::get<RatFun>(value_);
    return rf.num.hash() * 31 + rf.den.hash() + 1;
  }

  [[nodiscard]] std::string to_string() const {
    if (is_rational()) return q().to_string();
    const auto& rf = std::get<RatFun>(value_);
    if (rf.den == Polynomial(Rational(1))) return rf.num.to_string();
    return "(" + rf.num.to_string() + ")/(" + rf.den.to_string() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  struct RatFun {
    Polynomial num;
    Polynomial den;
    friend bool operator==(const RatFun&, const RatFun&) = default;
  };

  static Scalar from_parts(Polynomial n, Polynomial d) {
    Scalar s;
    s.value_ = RatFun{std::move(n), std::move(d)};
    return s;
  }

  [[nodiscard]] const Rational& q() const { return std::get<Rational>(value_); }
  [[nodiscard]] Polynomial num_poly() const { return numerator(); }
  [[nodiscard]] Polynomial den_poly() const { return denominator(); }

  std::variant<Rational, RatFun> value_;
};

namespace detail {

/// Recursive-descent reader for scalar expressions over numbers, `a`,
/// + - * / ^, parentheses and implicit multiplication ("2a", "3(1+a)").
class ScalarReader {
 public:
  ScalarReader(std::string_view text, std::optional<Rational> alpha_value)
      : text_(text), alpha_value_(alpha_value) {}

  Scalar read() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse scalar '" + std::string(text_) + "': " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Scalar expr() {
    Scalar v = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= unary();
      } else if (c == '/') {
        ++pos_;
        const Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (c == 'a' || c == '(') {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (e > 64) fail("exponent too large");
      Scalar r(1);
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    }
    return base;
  }

  Scalar primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (c == 'a') {
      ++pos_;
      if (alpha_value_) return Scalar(*alpha_value_);
      return Scalar::alpha();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ - start > 18) fail("integer literal too large");
      return Scalar(static_cast<std::int64_t>(std::stoll(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected character");
  }

  std::string_view text_;
  std::optional<Rational> alpha_value_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses "3/2", "-1", "1+2a", "(1+a)/(2a)". When `alpha_value` is set the
/// symbol `a` is replaced by it.
inline Scalar parse_scalar(std::string_view text, std::optional<Rational> alpha_value = std::nullopt) {
  return detail::ScalarReader(text, alpha_value).read();
}

}  // namespace superweyl

template <>
struct std::hash<superweyl::Scalar> {
  std::size_t operator()(const superweyl::Scalar& s) const noexcept { return s.hash(); }
};

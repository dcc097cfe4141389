#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "superweyl/error.hpp"

namespace superweyl {

/// Exact rational number.
///
/// Values whose reduced numerator and denominator fit in 64 bits are stored
/// inline and computed with 128-bit intermediates; anything larger is
/// promoted to a GMP rational and demoted again as soon as it fits. The
/// representation is therefore canonical and equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("zero denominator");
    *this = from_wide(num, den);
  }
  explicit Rational(const mpq_class& q) { *this = from_big(q); }

  /// The inline numerator / denominator; throws for promoted values.
  [[nodiscard]] std::int64_t num() const {
    if (big_) throw std::overflow_error("rational " + to_string() + " does not fit in 64 bits");
    return num_;
  }
  [[nodiscard]] std::int64_t den() const {
    if (big_) throw std::overflow_error("rational " + to_string() + " does not fit in 64 bits");
    return den_;
  }
  [[nodiscard]] bool fits_int64() const { return !big_; }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  /// Twice this value is an integer but this value is not.
  [[nodiscard]] bool is_half_odd() const { return big_ ? big_->get_den() == 2 : den_ == 2; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_big(a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return from_big(a.to_mpq() - b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return from_wide(static_cast<__int128>(a.num_) - b.num_, 1);
    return from_wide(static_cast<__int128>(a.num_) * b.den_ - static_cast<__int128>(b.num_) * a.den_,
                     static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.big_ || b.big_) return from_big(a.to_mpq() * b.to_mpq());
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.big_ || b.big_) return from_big(a.to_mpq() / b.to_mpq());
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }
  Rational operator-() const {
    if (big_) return from_big(-*big_);
    return from_wide(-static_cast<__int128>(num_), den_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (a.big_ || b.big_) return a.to_mpq() < b.to_mpq();
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  [[nodiscard]] Rational abs() const { return sign() < 0 ? -*this : *this; }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  }

  [[nodiscard]] std::string to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  [[nodiscard]] std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(big_->get_str());
    const std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }

 private:
  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static mpz_class wide_to_mpz(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & ~std::uint64_t{0}));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }

  static Rational from_wide(__int128 num, __int128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return {};
    if (den != 1) {
      const __int128 g = gcd_wide(num, den);
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < -INT64_MAX || den > INT64_MAX) {
      mpq_class q(wide_to_mpz(num), wide_to_mpz(den));
      q.canonicalize();
      Rational r;
      r.big_ = std::make_shared<const mpq_class>(std::move(q));
      return r;
    }
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  static Rational from_big(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
      Rational r;
      r.num_ = n.get_si();
      r.den_ = d.get_si();
      return r;
    }
    Rational r;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

}  // namespace superweyl

template <>
struct std::hash<superweyl::Rational> {
  std::size_t operator()(const superweyl::Rational& r) const noexcept { return r.hash(); }
};

#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "superweyl/scalar.hpp"

namespace superweyl {

/// A functional on the Cartan subalgebra, written in the basis
/// delta_1..delta_n, eps_1..eps_m (delta coordinates first).
class Weight {
 public:
  Weight() = default;
  Weight(std::size_t n_delta, std::size_t n_eps) : coords_(n_delta + n_eps), n_delta_(n_delta) {}
  Weight(std::vector<Scalar> delta, const std::vector<Scalar>& eps) : coords_(std::move(delta)) {
    n_delta_ = coords_.size();
    coords_.insert(coords_.end(), eps.begin(), eps.end());
  }

  /// Basis vector: delta_{index} when index < n_delta, otherwise eps_{index - n_delta}.
  static Weight basis(std::size_t n_delta, std::size_t n_eps, std::size_t index) {
    Weight w(n_delta, n_eps);
    w.coords_.at(index) = Scalar(1);
    return w;
  }
  static Weight delta(std::size_t n_delta, std::size_t n_eps, std::size_t i) { return basis(n_delta, n_eps, i); }
  static Weight eps(std::size_t n_delta, std::size_t n_eps, std::size_t j) {
    return basis(n_delta, n_eps, n_delta + j);
  }

  [[nodiscard]] std::size_t n_delta() const { return n_delta_; }
  [[nodiscard]] std::size_t n_eps() const { return coords_.size() - n_delta_; }
  [[nodiscard]] std::size_t dim() const { return coords_.size(); }

  /// mu_{delta_i}
  [[nodiscard]] const Scalar& delta_coord(std::size_t i) const { return coords_.at(i); }
  /// mu_{eps_j}
  [[nodiscard]] const Scalar& eps_coord(std::size_t j) const { return coords_.at(n_delta_ + j); }

  [[nodiscard]] const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  Scalar& operator[](std::size_t k) { return coords_[k]; }
  [[nodiscard]] const std::vector<Scalar>& coords() const { return coords_; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : coords_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_rational() const {
    for (const auto& c : coords_) {
      if (!c.is_rational()) return false;
    }
    return true;
  }

  [[nodiscard]] bool same_shape(const Weight& o) const { return n_delta_ == o.n_delta_ && dim() == o.dim(); }

  Weight& operator+=(const Weight& o) {
    check_shape(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_shape(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  Weight& operator*=(const Scalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Scalar& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Scalar& s) { return a *= s; }
  Weight operator-() const {
    Weight r(*this);
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  friend bool operator==(const Weight& a, const Weight& b) = default;

  friend bool structural_less(const Weight& a, const Weight& b) {
    for (std::size_t k = 0; k < a.coords_.size() && k < b.coords_.size(); ++k) {
      if (a.coords_[k] != b.coords_[k]) return structural_less(a.coords_[k], b.coords_[k]);
    }
    return a.coords_.size() < b.coords_.size();
  }

  [[nodiscard]] std::size_t hash() const {
    std::size_t h = n_delta_;
    for (const auto& c : coords_) h ^= c.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// Coordinate form "k1,...,kn;l1,...,lm".
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      if (k == n_delta_) out += ";";
      else if (k > 0) out += ",";
      out += coords_[k].to_string();
    }
    if (n_delta_ == coords_.size()) out += ";";
    return out;
  }

  /// Linear-combination form, e.g. "d1-e1", "1/2d1+1/2e1-1/2e2", "0".
  [[nodiscard]] std::string to_root_string() const {
    std::string out;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
      const Scalar& c = coords_[k];
      if (c.is_zero()) continue;
      const std::string name = k < n_delta_ ? "d" + std::to_string(k + 1) : "e" + std::to_string(k - n_delta_ + 1);
      std::string coef;
      bool negative = false;
      if (c.is_rational()) {
        negative = c.sign() < 0;
        const Rational mag = c.rational().abs();
        if (mag != Rational(1)) coef = mag.to_string();
      } else {
        coef = "(" + c.to_string() + ")";
      }
      if (negative) out += "-";
      else if (!out.empty()) out += "+";
      out += coef + name;
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

 private:
  void check_shape(const Weight& o) const {
    if (!same_shape(o)) throw DomainError("weights belong to different algebras");
  }

  std::vector<Scalar> coords_;
  std::size_t n_delta_ = 0;
};

namespace detail {

inline std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<Scalar> parse_coordinate_list(std::string_view text, std::size_t expected,
                                                 std::optional<Rational> alpha_value, const std::string& what) {
  std::vector<std::string> items = split_list(text, ',');
  // Empty trailing entries ("2," or "") are tolerated.
  while (!items.empty() && trim(items.back()).empty()) items.pop_back();
  if (items.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " " + what + " coordinates, got " +
                     std::to_string(items.size()));
  }
  std::vector<Scalar> out;
  out.reserve(expected);
  for (const auto& item : items) {
    const std::string t = trim(item);
    if (t.empty()) throw ParseError("empty " + what + " coordinate");
    out.push_back(parse_scalar(t, alpha_value));
  }
  return out;
}

}  // namespace detail

/// Parses "k1,...,kn;l1,...,lm". Missing delta or eps parts are an error
/// unless the corresponding count is zero.
inline Weight parse_weight(std::string_view text, std::size_t n_delta, std::size_t n_eps,
                           std::optional<Rational> alpha_value = std::nullopt) {
  const auto halves = detail::split_list(text, ';');
  if (halves.size() != 2) throw ParseError("weight '" + std::string(text) + "' must contain exactly one ';'");
  auto delta = detail::parse_coordinate_list(halves[0], n_delta, alpha_value, "delta");
  auto eps = detail::parse_coordinate_list(halves[1], n_eps, alpha_value, "eps");
  return Weight(std::move(delta), eps);
}

/// Parses the linear-combination form produced by Weight::to_root_string.
inline Weight parse_root_string(std::string_view text, std::size_t n_delta, std::size_t n_eps,
                                std::optional<Rational> alpha_value = std::nullopt) {
  Weight w(n_delta, n_eps);
  const std::string s = detail::trim(text);
  if (s == "0") return w;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("cannot parse root '" + s + "': " + why);
  };
  if (s.empty()) fail("empty");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      fail("expected '+' or '-'");
    }
    Scalar coef(1);
    if (pos < s.size() && s[pos] == '(') {
      int depth = 0;
      const std::size_t start = pos;
      for (; pos < s.size(); ++pos) {
        if (s[pos] == '(') ++depth;
        if (s[pos] == ')' && --depth == 0) break;
      }
      if (pos >= s.size()) fail("unbalanced parentheses");
      coef = parse_scalar(s.substr(start + 1, pos - start - 1), alpha_value);
      ++pos;
    } else {
      const std::size_t start = pos;
      while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
      if (pos > start) coef = parse_scalar(s.substr(start, pos - start));
    }
    if (pos >= s.size() || (s[pos] != 'd' && s[pos] != 'e')) fail("expected basis symbol d<i> or e<j>");
    const bool is_delta = s[pos] == 'd';
    ++pos;
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("missing basis index");
    const std::size_t idx = std::stoul(s.substr(start, pos - start));
    const std::size_t limit = is_delta ? n_delta : n_eps;
    if (idx < 1 || idx > limit) fail("basis index out of range");
    const std::size_t k = is_delta ? idx - 1 : n_delta + idx - 1;
    w[k] += sign < 0 ? -coef : coef;
  }
  return w;
}

}  // namespace superweyl

template <>
struct std::hash<superweyl::Weight> {
  std::size_t operator()(const superweyl::Weight& w) const noexcept { return w.hash(); }
};

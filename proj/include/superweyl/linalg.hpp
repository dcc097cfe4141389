#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "superweyl/weight.hpp"

namespace superweyl {

using Matrix = std::vector<std::vector<Scalar>>;

/// Determinant by fraction-free-enough Gaussian elimination over Q(a).
inline Scalar determinant(Matrix m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Scalar inv = Scalar(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// Rank of a list of vectors.
inline std::size_t rank(const std::vector<Weight>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t d = vectors.front().dim();
  Matrix m;
  for (const auto& v : vectors) m.push_back(v.coords());
  std::size_t r = 0;
  for (std::size_t col = 0; col < d && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    const Scalar inv = Scalar(1) / m[r][col];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col].is_zero()) continue;
      const Scalar f = m[i][col] * inv;
      for (std::size_t c = col; c < d; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return r;
}

/// Expresses vectors in a fixed linearly independent family.
///
/// The family is preprocessed once into a left inverse on a set of pivot
/// coordinates; `coordinates` then costs one small matrix-vector product
/// plus a reconstruction check, and reports nullopt when the target lies
/// outside the span.
class BasisSolver {
 public:
  BasisSolver() = default;
  explicit BasisSolver(std::vector<Weight> basis) : basis_(std::move(basis)) {
    const std::size_t k = basis_.size();
    if (k == 0) return;
    const std::size_t d = basis_.front().dim();
    // Rows are coordinates, columns are basis vectors; augmented with identity on the row side.
    Matrix a(d, std::vector<Scalar>(k));
    Matrix track(d, std::vector<Scalar>(d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < k; ++c) a[r][c] = basis_[c][r];
      track[r][r] = Scalar(1);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < k; ++col) {
      std::size_t pivot = row;
      while (pivot < d && a[pivot][col].is_zero()) ++pivot;
      if (pivot == d) throw DomainError("basis vectors are linearly dependent");
      std::swap(a[pivot], a[row]);
      std::swap(track[pivot], track[row]);
      const Scalar inv = Scalar(1) / a[row][col];
      for (auto& x : a[row]) x *= inv;
      for (auto& x : track[row]) x *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == row || a[r][col].is_zero()) continue;
        const Scalar f = a[r][col];
        for (std::size_t c = 0; c < k; ++c) a[r][c] -= f * a[row][c];
        for (std::size_t c = 0; c < d; ++c) track[r][c] -= f * track[row][c];
      }
      ++row;
    }
    // After elimination the first k rows of `track` form a left inverse.
    left_inverse_.assign(track.begin(), track.begin() + static_cast<std::ptrdiff_t>(k));
  }

  [[nodiscard]] const std::vector<Weight>& basis() const { return basis_; }

  [[nodiscard]] std::optional<std::vector<Scalar>> coordinates(const Weight& target) const {
    const std::size_t k = basis_.size();
    std::vector<Scalar> c(k);
    for (std::size_t i = 0; i < k; ++i) {
      Scalar acc;
      const auto& row = left_inverse_[i];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero() && !target[j].is_zero()) acc += row[j] * target[j];
      }
      c[i] = acc;
    }
    // Reconstruct to detect residuals outside the span.
    for (std::size_t r = 0; r < target.dim(); ++r) {
      Scalar acc;
      for (std::size_t i = 0; i < k; ++i) {
        if (!c[i].is_zero() && !basis_[i][r].is_zero()) acc += c[i] * basis_[i][r];
      }
      if (acc != target[r]) return std::nullopt;
    }
    return c;
  }

 private:
  std::vector<Weight> basis_;
  Matrix left_inverse_;
};

}  // namespace superweyl

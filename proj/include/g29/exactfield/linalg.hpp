#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace g29::linalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
bool is_zero_value(const T& v) {
  return v == T(0);
}

/// Row echelon form in place; returns the rank.
template <class T>
int row_reduce(Matrix<T>& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero_value(m[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    T inv = T(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero_value(m[i][c])) continue;
      T f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

template <class T>
int rank(Matrix<T> m) {
  return row_reduce(m);
}

/// Solves A x = b for square invertible A; nullopt when singular.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size();
  Matrix<T> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  if (row_reduce(m) < static_cast<int>(n)) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (is_zero_value(m[i][i])) return std::nullopt;
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n];
  return x;
}

/// Incremental linear-dependency finder: feed vectors v0, v1, ...; reports
/// the first relation sum c_i v_i = 0 with c_last = 1.
template <class T>
class DependencyFinder {
 public:
  explicit DependencyFinder(std::size_t dim) : dim_(dim) {}

  /// Returns the relation coefficients (size k+1) if v_k depends on earlier vectors.
  std::optional<std::vector<T>> add(std::vector<T> v) {
    const std::size_t k = count_++;
    std::vector<T> comb(k + 1, T(0));
    comb[k] = T(1);
    for (auto& row : rows_) {
      const T& f = v[row.pivot];
      if (is_zero_value(f)) continue;
      T g = f;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!is_zero_value(row.vec[j])) v[j] = v[j] - g * row.vec[j];
      for (std::size_t j = 0; j < row.comb.size(); ++j)
        if (!is_zero_value(row.comb[j])) comb[j] = comb[j] - g * row.comb[j];
    }
    std::size_t piv = 0;
    while (piv < dim_ && is_zero_value(v[piv])) ++piv;
    if (piv == dim_) return comb;
    T inv = T(1) / v[piv];
    for (auto& x : v) x = x * inv;
    for (auto& x : comb) x = x * inv;
    rows_.push_back(Row{piv, std::move(v), std::move(comb)});
    return std::nullopt;
  }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<T> vec;
    std::vector<T> comb;
  };
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<Row> rows_;
};

}  // namespace g29::linalg

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <optional>
#include <vector>

namespace alcove {

using Rat = boost::rational<boost::multiprecision::cpp_int>;

/// Exact solve of A x = b for an m x k system with k independent columns.
/// Returns nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_exact(
    const std::vector<std::vector<long long>>& a,
    const std::vector<long long>& b) {
  const size_t m = a.size();
  const size_t k = m == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = Rat(a[i][j]);
    aug[i][k] = Rat(b[i]);
  }
  std::vector<size_t> pivot_row(k, m);
  size_t row = 0;
  for (size_t col = 0; col < k && row < m; ++col) {
    size_t pr = m;
    for (size_t i = row; i < m; ++i)
      if (aug[i][col] != Rat(0)) {
        pr = i;
        break;
      }
    if (pr == m) continue;  // dependent column (caller beware)
    std::swap(aug[row], aug[pr]);
    Rat inv = aug[row][col];
    for (size_t j = col; j <= k; ++j) aug[row][j] /= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == row) continue;
      Rat f = aug[i][col];
      if (f == Rat(0)) continue;
      for (size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Consistency: remaining rows must be all zero.
  for (size_t i = row; i < m; ++i)
    if (aug[i][k] != Rat(0)) return std::nullopt;
  std::vector<Rat> x(k, Rat(0));
  for (size_t col = 0; col < k; ++col)
    if (pivot_row[col] < m) x[col] = aug[pivot_row[col]][k];
  return x;
}

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

}  // namespace alcove

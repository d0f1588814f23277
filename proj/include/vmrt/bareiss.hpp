#pragma once

#include <utility>
#include <vector>

namespace vmrt {

template <class T>
using Matrix = std::vector<std::vector<T>>;

struct EchelonInfo {
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
  int sign = 1;  // parity of the row swaps
};

/// Fraction-free (Bareiss) elimination to row-echelon form, in place. Every
/// division is exact over an integral domain, so entries stay in the ring.
/// `is_zero(x)` and `exact_div(num, den)` supply the ring operations.
/// Rows below the rank end up zero; the k-th pivot is a[k][pivot_cols[k]].
template <class T, class IsZero, class ExactDiv>
EchelonInfo bareiss_echelon(Matrix<T>& a, const T& one, IsZero is_zero, ExactDiv exact_div) {
  EchelonInfo info;
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a.front().size();
  T prev = one;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && is_zero(a[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      info.sign = -info.sign;
    }
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
      }
      a[i][c] = one * 0;
    }
    prev = a[r][c];
    info.pivot_cols.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

/// Determinant of a square matrix by Bareiss elimination.
template <class T, class IsZero, class ExactDiv>
T bareiss_determinant(Matrix<T> a, const T& one, IsZero is_zero, ExactDiv exact_div) {
  const size_t n = a.size();
  if (n == 0) return one;
  EchelonInfo info = bareiss_echelon(a, one, is_zero, exact_div);
  if (info.rank < n) return one * 0;
  T det = a[n - 1][n - 1];
  if (info.sign < 0) det = one * 0 - det;
  return det;
}

}  // namespace vmrt

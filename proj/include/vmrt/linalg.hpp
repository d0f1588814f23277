#pragma once

#include <vector>

#include "vmrt/rational.hpp"

namespace vmrt {

/// Dense matrix of rationals, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(size_t n);
  /// Columns given as vectors of length `rows`.
  static QMatrix from_columns(size_t rows, const std::vector<std::vector<Rat>>& columns);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rat& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rat> column(size_t c) const;
  bool is_zero() const;

  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// [A | B]; row counts must agree (Error(ShapeMismatch)).
QMatrix hcat(const QMatrix& a, const QMatrix& b);

/// Rank by fraction-free elimination on the row-wise integer scaling of A.
size_t rank(const QMatrix& a);

/// Basis of {x : A x = 0} as the columns of a cols(A) x nullity matrix.
QMatrix kernel(const QMatrix& a);

/// dim(col A ∩ col B) = rank A + rank B - rank [A|B].
size_t span_intersection(const QMatrix& a, const QMatrix& b);

/// Columns spanning col A ∩ col B (linearly independent), from the kernel
/// of [A | -B]. Empty (rows x 0) when the intersection is zero.
QMatrix intersection_basis(const QMatrix& a, const QMatrix& b);

}  // namespace vmrt

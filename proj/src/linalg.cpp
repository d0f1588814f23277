#include "vmrt/linalg.hpp"

#include "vmrt/bareiss.hpp"
#include "vmrt/error.hpp"

namespace vmrt {

namespace {

// Row-wise scaling to integers; the row space (and so rank and kernel) is
// unchanged.
Matrix<Int> integer_rows(const QMatrix& a) {
  Matrix<Int> out(a.rows(), std::vector<Int>(a.cols()));
  for (size_t r = 0; r < a.rows(); ++r) {
    Int l = 1;
    for (size_t c = 0; c < a.cols(); ++c) l = lcm(l, a(r, c).get_den());
    for (size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
  }
  return out;
}

EchelonInfo echelon(Matrix<Int>& m) {
  return bareiss_echelon(
      m, Int(1), [](const Int& x) { return sgn(x) == 0; },
      [](const Int& num, const Int& den) {
        Int q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
      });
}

}  // namespace

QMatrix QMatrix::identity(size_t n) {
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(size_t rows, const std::vector<std::vector<Rat>>& columns) {
  QMatrix m(rows, columns.size());
  for (size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::ShapeMismatch, "column length differs from row count");
    for (size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

std::vector<Rat> QMatrix::column(size_t c) const {
  std::vector<Rat> out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool QMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!vmrt::is_zero(x)) return false;
  }
  return true;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shapes do not match");
  QMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

QMatrix hcat(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "hcat: row counts differ");
  QMatrix out(a.rows(), a.cols() + b.cols());
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

size_t rank(const QMatrix& a) {
  Matrix<Int> m = integer_rows(a);
  return echelon(m).rank;
}

QMatrix kernel(const QMatrix& a) {
  Matrix<Int> m = integer_rows(a);
  const EchelonInfo info = echelon(m);
  const size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : info.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> x(n);
    x[free] = 1;
    for (size_t r = info.rank; r-- > 0;) {
      const size_t p = info.pivot_cols[r];
      Rat acc(0);
      for (size_t j = p + 1; j < n; ++j) {
        if (!is_zero(x[j])) acc += Rat(m[r][j]) * x[j];
      }
      x[p] = -acc / Rat(m[r][p]);
    }
    basis.push_back(std::move(x));
  }
  return QMatrix::from_columns(n, basis);
}

size_t span_intersection(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "span_intersection: row counts differ");
  return rank(a) + rank(b) - rank(hcat(a, b));
}

QMatrix intersection_basis(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "intersection_basis: row counts differ");
  QMatrix neg_b = b;
  for (size_t r = 0; r < b.rows(); ++r) {
    for (size_t c = 0; c < b.cols(); ++c) neg_b(r, c) = -b(r, c);
  }
  const QMatrix k = kernel(hcat(a, neg_b));
  std::vector<std::vector<Rat>> picked;
  QMatrix current(a.rows(), 0);
  for (size_t c = 0; c < k.cols(); ++c) {
    std::vector<Rat> v(a.rows());
    for (size_t r = 0; r < a.rows(); ++r) {
      for (size_t j = 0; j < a.cols(); ++j) v[r] += a(r, j) * k(j, c);
    }
    QMatrix candidate = hcat(current, QMatrix::from_columns(a.rows(), {v}));
    if (rank(candidate) > current.cols()) {
      current = std::move(candidate);
    }
  }
  return current;
}

}  // namespace vmrt

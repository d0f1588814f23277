#include "vmrt/resultant.hpp"

#include "vmrt/error.hpp"

namespace vmrt {

namespace {

void check_inputs(const PolyUniPoly& p, const PolyUniPoly& q) {
  if (p.is_zero_poly() || q.is_zero_poly()) {
    throw Error(ErrorKind::ZeroPolynomial, "resultant: zero polynomial argument");
  }
  if (p.degree() == 0 && q.degree() == 0) {
    throw Error(ErrorKind::ZeroPolynomial, "resultant: neither polynomial involves the eliminated variable");
  }
  if (!(p[0].vars() == q[0].vars())) {
    throw Error(ErrorKind::VariableMismatch, "resultant: coefficient rings differ");
  }
}

}  // namespace

Matrix<SparsePoly> sylvester_matrix(const PolyUniPoly& p, const PolyUniPoly& q) {
  check_inputs(p, q);
  const size_t dp = static_cast<size_t>(p.degree());
  const size_t dq = static_cast<size_t>(q.degree());
  const size_t size = dp + dq;
  const SparsePoly zero(p[0].vars());
  Matrix<SparsePoly> m(size, std::vector<SparsePoly>(size, zero));
  for (size_t i = 0; i < dq; ++i) {
    for (size_t j = 0; j <= dp; ++j) m[i][i + j] = p[j];
  }
  for (size_t i = 0; i < dp; ++i) {
    for (size_t j = 0; j <= dq; ++j) m[dq + i][i + j] = q[j];
  }
  return m;
}

SparsePoly resultant(const PolyUniPoly& p, const PolyUniPoly& q) {
  Matrix<SparsePoly> m = sylvester_matrix(p, q);
  const SparsePoly one(p[0].vars(), Rat(1));
  return bareiss_determinant(
      std::move(m), one, [](const SparsePoly& x) { return x.is_zero(); },
      [](const SparsePoly& num, const SparsePoly& den) { return exact_divide(num, den); });
}

SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, std::string_view var) {
  if (!(p.vars() == q.vars())) throw Error(ErrorKind::VariableMismatch, "resultant: variable lists differ");
  auto idx = p.vars().index_of(var);
  if (!idx) throw Error(ErrorKind::UnknownVariable, "resultant: unknown variable '" + std::string(var) + "'");
  if (p.is_zero() || q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant: zero polynomial argument");
  return resultant(PolyUniPoly(coefficients_in(p, *idx, false)), PolyUniPoly(coefficients_in(q, *idx, false)));
}

}  // namespace vmrt

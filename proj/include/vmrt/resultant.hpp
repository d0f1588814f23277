#pragma once

#include <string_view>

#include "vmrt/bareiss.hpp"
#include "vmrt/sparse_poly.hpp"
#include "vmrt/uni_poly.hpp"

namespace vmrt {

/// Sylvester matrix of p (degree d) and q (degree e), size d+e. The first
/// e rows hold p's coefficients, the last d rows q's; each row lists the
/// coefficients in ascending powers, shifted one column per row. With this
/// layout Res(x - a, x - b) = b - a.
Matrix<SparsePoly> sylvester_matrix(const PolyUniPoly& p, const PolyUniPoly& q);

/// Determinant of the Sylvester matrix, by fraction-free elimination.
/// Coefficients must share one variable list. Degrees are the actual
/// degrees (declared bounds are ignored). Throws Error(ZeroPolynomial) if
/// either input is zero or both are constant in lambda.
SparsePoly resultant(const PolyUniPoly& p, const PolyUniPoly& q);

/// Resultant eliminating `var`; the result keeps p's variable list and does
/// not involve `var`.
SparsePoly resultant(const SparsePoly& p, const SparsePoly& q, std::string_view var);

}  // namespace vmrt

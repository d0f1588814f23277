#pragma once

#include <vector>

#include "vmrt/sparse_poly.hpp"
#include "vmrt/uni_poly.hpp"

namespace vmrt {

/// Affine coordinates (y_1..y_n) of the point [1 : y_1 : ... : y_n].
struct AffinePoint {
  std::vector<Rat> coords;
  size_t size() const { return coords.size(); }
  static AffinePoint origin(size_t n) { return {std::vector<Rat>(n)}; }
};

/// Direction (z_1..z_n) of the line y + lambda z.
struct Direction {
  std::vector<Rat> coords;
  size_t size() const { return coords.size(); }
  bool is_zero() const;
};

/// z1..zn
VarList direction_vars(size_t n);

/// Splits a form of the given degree in x_0..x_n by powers of x_var:
/// f = sum_k x_var^{degree-k} f_k with f_k homogeneous of degree k in the
/// remaining variables. Throws Error(NotHomogeneous) if f is not a form of
/// that degree.
std::vector<SparsePoly> graded_parts(const SparsePoly& f, int degree, size_t var = 0);

/// f(1, y + lambda z) with z symbolic: coefficient k is a_k(y; z), a form of
/// degree k in z1..zn. The result stores all deg(f)+1 slots and declares
/// deg(f) as its bound.
PolyUniPoly restrict_to_line(const SparsePoly& f, const AffinePoint& y);

/// f(1, y + lambda z) for a rational direction.
RatUniPoly restrict_to_line(const SparsePoly& f, const AffinePoint& y, const Direction& z);

}  // namespace vmrt

#pragma once

#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// First-order jet value + eps * derivative with eps^2 = 0, over polynomial
/// coefficients. Multiplication is the Leibniz rule.
struct Jet1 {
  SparsePoly value;
  SparsePoly derivative;

  Jet1() = default;
  Jet1(SparsePoly v, SparsePoly d);
  /// A jet with zero derivative.
  static Jet1 constant(SparsePoly v);

  /// Defined only when `value` is a nonzero rational constant; throws
  /// Error(InvalidArgument) otherwise.
  Jet1 inverse() const;

  friend Jet1 operator+(const Jet1& a, const Jet1& b);
  friend Jet1 operator-(const Jet1& a, const Jet1& b);
  friend Jet1 operator*(const Jet1& a, const Jet1& b);
  friend Jet1 operator*(const Jet1& a, const Rat& c);
  friend Jet1 operator/(const Jet1& a, const Jet1& b) { return a * b.inverse(); }
  friend bool operator==(const Jet1& a, const Jet1& b) = default;
};

}  // namespace vmrt

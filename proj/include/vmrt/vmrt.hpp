#pragma once

#include <cstdint>
#include <vector>

#include "vmrt/line_restriction.hpp"
#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// t0..tn
VarList ambient_vars(size_t n);

/// Branch hypersurface Y = {f = 0} in P^n, f a form of degree 2m in t0..tn.
class Hypersurface {
 public:
  /// Requires a nonzero form of even positive degree. With `enforce_range`
  /// the double-cover range 2 <= m <= n-1 is checked as well
  /// (Error(ParameterRange) otherwise).
  static Hypersurface make(SparsePoly f, bool enforce_range = true);

  int n() const { return n_; }
  int m() const { return m_; }
  const SparsePoly& f() const { return f_; }

  /// f(1, y)
  Rat value_at(const AffinePoint& y) const;

 private:
  Hypersurface(SparsePoly f, int n, int m) : f_(std::move(f)), n_(n), m_(m) {}

  SparsePoly f_;
  int n_ = 0;
  int m_ = 0;
};

/// Generators B_{m+1}..B_{2m} of the ECO-line directions at y, forms in
/// z1..zn with deg B_k = k.
struct VmrtSystem {
  int m = 0;
  AffinePoint y;
  std::vector<SparsePoly> B;

  const SparsePoly& B_k(int k) const { return B.at(static_cast<size_t>(k - m - 1)); }
  /// All B_k vanish at z.
  bool vanishes_at(const Direction& z) const;
};

/// Forms b_{m+1}..b_{2m} in z1..zn cutting out a complete intersection.
struct CiData {
  std::vector<SparsePoly> b;

  int m() const { return static_cast<int>(b.size()); }
  size_t n() const { return b.empty() ? 0 : b.front().nvars(); }
  /// Throws Error(DegreeMismatch) unless b[i] is a form of degree m+1+i and
  /// all share one variable list.
  void validate() const;
};

/// B_k(y; z) = a_k/a_0 - A_k(a_1/a_0, ..., a_m/a_0) with a_k from f(1, y + lambda z).
/// Throws Error(BasePointOnBranch) when f(1, y) = 0.
VmrtSystem vmrt_equations(const Hypersurface& h, const AffinePoint& y);

/// Whether f(1, y + lambda z) / f(1, y) is the square of a polynomial in
/// lambda. A deficit in degree (the line meets f_{2m} = 0 at infinity) is
/// allowed; the remaining multiplicity there is then even as well.
bool is_eco_line(const Hypersurface& h, const AffinePoint& y, const Direction& z);

/// f = t0^{2m} + sum_k t0^{2m-k} b_k(t1..tn); its system at y = 0 is b.
Hypersurface build_converse(const CiData& c, bool enforce_range = true);

/// Random f = Q^2 + sum_j L_j R_j for which the line through y with
/// direction z is an ECO line: the L_j are linear forms vanishing on that
/// line, Q has degree m with Q(1, y) != 0, the R_j have degree 2m-1. With
/// `with_remainder` false every R_j is zero and f = Q^2.
Hypersurface eco_witness(int n, int m, const AffinePoint& y, const Direction& z, std::uint64_t seed,
                         bool with_remainder = true);

struct PointCount {
  int degree = 0;
  bool squarefree = false;
  int attempts = 0;      // coordinate changes drawn before one was usable
  SparsePoly resultant;  // binary form in w1, w2 (w3 eliminated)
};

/// For n = 3, m = 2: the resultant of B_3 and B_4 eliminating the third
/// coordinate after a random invertible change of coordinates z = M w
/// (redrawn while the leading coefficients in w3 vanish). Its degree counts
/// the VMRT points; squarefree means they are distinct.
/// Throws Error(ResultantDegenerate) if the system has a curve component or
/// is identically zero.
PointCount count_vmrt_points(const Hypersurface& h, const AffinePoint& y, std::uint64_t seed);

}  // namespace vmrt

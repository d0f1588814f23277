#pragma once

#include <map>
#include <vector>

#include "vmrt/linalg.hpp"
#include "vmrt/vmrt.hpp"

namespace vmrt {

/// Degree-k monomials in n variables, in grevlex order; coordinates on the
/// space V_k of degree-k forms.
struct MonomialBasis {
  size_t n = 0;
  unsigned k = 0;
  std::vector<Exponents> monomials;
  std::map<Exponents, size_t> index;

  static MonomialBasis make(size_t n, unsigned k);
  size_t size() const { return monomials.size(); }
};

/// Coordinates of a degree-k form in the basis, as a column. Variable names
/// are ignored; the count and degree must match (Error(DegreeMismatch),
/// Error(DimensionMismatch)).
QMatrix coeff_vector(const SparsePoly& p, const MonomialBasis& basis);

/// The form B_{m+1}(y; z) as a column in V_{m+1}.
QMatrix mu(const Hypersurface& h, const AffinePoint& y);

/// Differential of mu at the origin, one column per coordinate y_i, from the
/// closed form
///   dB_k/dy_i = df_{k+1}/dt_i - f_k df_1/dt_i
///               - sum_j dA_k/dx_j(f_1..f_m) (df_{j+1}/dt_i - f_j df_1/dt_i)
/// with k = m+1 and f_{2m+1} = 0. Needs f(1,0,...,0) = 1
/// (Error(NormalizationViolated) otherwise).
QMatrix dmu_lemma(const Hypersurface& h);

/// The same matrix computed independently: the whole B_{m+1} pipeline is run
/// over first-order jets with y = eps e_i.
QMatrix dmu_jet(const Hypersurface& h);

/// Columns z_i dh/dz_j for all (i, j), i-major: a spanning set of the
/// tangent space at h of its GL(n) orbit in V_degree.
QMatrix orbit_tangent(const SparsePoly& h, unsigned degree);

struct VariationReport {
  int n = 0;
  int m = 0;
  Hypersurface f;
  size_t rank_dmu = 0;
  size_t dim_orbit = 0;
  size_t dim_intersection = 0;
  bool maximal = false;
  size_t basis_size = 0;  // dim V_{m+1}
};

/// rank of d(mu), dimension of the orbit tangent space at mu(0), and the
/// dimension of their intersection, at x = [1:0:...:0]. maximal means
/// rank = n and trivial intersection.
VariationReport variation_report(const Hypersurface& h);

/// The two families with maximal variation:
///   m = 2:  t0^4 + b(t1^3+...+tn^3) t0 + (t1^4+...+tn^4) + c sum_{i<j<k<l} ti tj tk tl
///   m >= 3: t0^{2m} + b(t1^{m+1}+...+tn^{m+1}) t0^{m-1}
///           + c t1 t2 t3 (t4^{m-1}+...+tn^{m-1}) t0^{m-2} + t1^{2m}+...+tn^{2m}
/// Needs n >= 4, 2 <= m <= n-1 and b, c nonzero (Error(ParameterRange)).
Hypersurface explicit_family(int n, int m, const Rat& b, const Rat& c);

/// Moves y to the origin and rescales: f'(t) = f(t0, t1 + y1 t0, ..., tn + yn t0) / f(1, y),
/// so f'(1,0,...,0) = 1 and the line data at the origin of f' equals that at y of f.
Hypersurface recenter(const Hypersurface& h, const AffinePoint& y);

}  // namespace vmrt

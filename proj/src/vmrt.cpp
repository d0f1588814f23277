#include "vmrt/vmrt.hpp"

#include "vmrt/eco.hpp"
#include "vmrt/error.hpp"
#include "vmrt/resultant.hpp"
#include "vmrt/sampler.hpp"
#include "vmrt/uni_poly.hpp"

namespace vmrt {

VarList ambient_vars(size_t n) { return VarList::indexed("t", 0, static_cast<unsigned>(n + 1)); }

Hypersurface Hypersurface::make(SparsePoly f, bool enforce_range) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "hypersurface equation is zero");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "hypersurface equation is not homogeneous");
  if (f.nvars() < 2) throw Error(ErrorKind::DimensionMismatch, "hypersurface needs at least t0, t1");
  const int d = f.degree();
  if (d == 0 || d % 2 != 0) {
    throw Error(ErrorKind::DegreeMismatch, "branch hypersurface must have even positive degree, got " + std::to_string(d));
  }
  const int n = static_cast<int>(f.nvars()) - 1;
  const int m = d / 2;
  if (enforce_range && (m < 2 || m > n - 1)) {
    throw Error(ErrorKind::ParameterRange,
                "need 2 <= m <= n-1, got n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  return Hypersurface(std::move(f), n, m);
}

Rat Hypersurface::value_at(const AffinePoint& y) const {
  if (static_cast<int>(y.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
  std::vector<Rat> pt;
  pt.reserve(y.size() + 1);
  pt.emplace_back(1);
  pt.insert(pt.end(), y.coords.begin(), y.coords.end());
  return evaluate_at(f_, pt);
}

bool VmrtSystem::vanishes_at(const Direction& z) const {
  for (const auto& bk : B) {
    if (!is_zero(evaluate_at(bk, z.coords))) return false;
  }
  return true;
}

void CiData::validate() const {
  const int m = this->m();
  if (m < 1) throw Error(ErrorKind::DegreeMismatch, "complete intersection data is empty");
  for (int i = 0; i < m; ++i) {
    const SparsePoly& bk = b[static_cast<size_t>(i)];
    if (!(bk.vars() == b.front().vars())) {
      throw Error(ErrorKind::VariableMismatch, "complete intersection forms use different variables");
    }
    const int want = m + 1 + i;
    if (!bk.is_homogeneous(want) || (!bk.is_zero() && bk.degree() != want)) {
      throw Error(ErrorKind::DegreeMismatch,
                  "b_" + std::to_string(want) + " is not a form of degree " + std::to_string(want));
    }
  }
}

VmrtSystem vmrt_equations(const Hypersurface& h, const AffinePoint& y) {
  if (static_cast<int>(y.size()) != h.n()) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
  const int m = h.m();
  PolyUniPoly a = restrict_to_line(h.f(), y);
  const Rat a0 = a[0].constant_value();
  if (is_zero(a0)) throw Error(ErrorKind::BasePointOnBranch, "f(1, y) = 0: base point lies on the branch divisor");

  const Rat inv = 1 / a0;
  std::vector<SparsePoly> normalized;
  normalized.reserve(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) normalized.push_back(a[static_cast<size_t>(j)] * inv);

  auto fam = build_family(m);
  VmrtSystem sys;
  sys.m = m;
  sys.y = y;
  for (int k = m + 1; k <= 2 * m; ++k) {
    sys.B.push_back(a[static_cast<size_t>(k)] * inv - substitute(fam->A_of(k), normalized));
  }
  return sys;
}

bool is_eco_line(const Hypersurface& h, const AffinePoint& y, const Direction& z) {
  if (static_cast<int>(y.size()) != h.n() || z.size() != y.size()) {
    throw Error(ErrorKind::DimensionMismatch, "point or direction has the wrong dimension");
  }
  if (z.is_zero()) throw Error(ErrorKind::ZeroDirection, "direction is zero");
  RatUniPoly restricted = restrict_to_line(h.f(), y, z);
  const Rat a0 = coeff(restricted, 0);
  if (is_zero(a0)) throw Error(ErrorKind::BasePointOnBranch, "f(1, y) = 0: base point lies on the branch divisor");
  return is_perfect_square(restricted * Rat(1 / a0));
}

Hypersurface build_converse(const CiData& c, bool enforce_range) {
  c.validate();
  const int m = c.m();
  const size_t n = c.n();
  const VarList t = ambient_vars(n);
  SparsePoly f = SparsePoly::variable(t, 0).pow(static_cast<unsigned>(2 * m));
  for (int i = 0; i < m; ++i) {
    const int k = m + 1 + i;
    for (const auto& [e, coeff] : c.b[static_cast<size_t>(i)].terms()) {
      Exponents te(n + 1);
      te[0] = static_cast<unsigned>(2 * m - k);
      std::copy(e.begin(), e.end(), te.begin() + 1);
      f.add_term(te, coeff);
    }
  }
  return Hypersurface::make(std::move(f), enforce_range);
}

Hypersurface eco_witness(int n, int m, const AffinePoint& y, const Direction& z, std::uint64_t seed,
                         bool with_remainder) {
  if (n < 1 || m < 1) throw Error(ErrorKind::ParameterRange, "eco_witness: need n >= 1 and m >= 1");
  if (static_cast<int>(y.size()) != n || static_cast<int>(z.size()) != n) {
    throw Error(ErrorKind::DimensionMismatch, "eco_witness: point or direction has the wrong dimension");
  }
  if (z.is_zero()) throw Error(ErrorKind::ZeroDirection, "eco_witness: direction is zero");

  Sampler rng(seed);
  const VarList t = ambient_vars(static_cast<size_t>(n));
  std::vector<Rat> pt{Rat(1)};
  pt.insert(pt.end(), y.coords.begin(), y.coords.end());

  SparsePoly q(t);
  do {
    q = rng.form(t, static_cast<unsigned>(m), 3);
  } while (is_zero(evaluate_at(q, pt)));
  SparsePoly f = q * q;

  if (with_remainder) {
    size_t pivot = 0;
    while (is_zero(z.coords[pivot])) ++pivot;
    auto var = [&](size_t i) { return SparsePoly::variable(t, i); };
    // t_a - y_a t0 vanishes at (1, y); scaled by z_i/z_a it matches t_i - y_i t0 at (0, z).
    const SparsePoly pivot_form = var(pivot + 1) - var(0) * y.coords[pivot];
    for (size_t i = 0; i < static_cast<size_t>(n); ++i) {
      if (i == pivot) continue;
      SparsePoly lin = var(i + 1) - var(0) * y.coords[i] - pivot_form * Rat(z.coords[i] / z.coords[pivot]);
      f += lin * rng.form(t, static_cast<unsigned>(2 * m - 1), 3);
    }
  }
  return Hypersurface::make(std::move(f), false);
}

namespace {

// Binary form in the first two slots (third slot unused) is squarefree iff
// its dehomogenization is squarefree and at most a simple root sits at
// infinity.
bool binary_form_squarefree(const SparsePoly& form) {
  const int d = form.degree();
  std::vector<Rat> coeffs(static_cast<size_t>(d) + 1);
  for (const auto& [e, c] : form.terms()) coeffs[e[0]] = c;
  RatUniPoly g(std::move(coeffs));
  if (d - g.degree() > 1) return false;
  for (const auto& [factor, mult] : squarefree_factorization(g).factors) {
    if (mult > 1) return false;
  }
  return true;
}

}  // namespace

PointCount count_vmrt_points(const Hypersurface& h, const AffinePoint& y, std::uint64_t seed) {
  if (h.n() != 3 || h.m() != 2) {
    throw Error(ErrorKind::ParameterRange, "count_vmrt_points is implemented for n = 3, m = 2");
  }
  VmrtSystem sys = vmrt_equations(h, y);
  const SparsePoly& b3 = sys.B_k(3);
  const SparsePoly& b4 = sys.B_k(4);
  if (b3.is_zero() || b4.is_zero()) {
    throw Error(ErrorKind::ResultantDegenerate, "an equation of the system vanishes identically");
  }

  const VarList w = VarList::indexed("w", 1, 3);
  Sampler rng(seed);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    std::vector<std::vector<long>> mat(3, std::vector<long>(3));
    for (auto& row : mat) {
      for (auto& x : row) x = static_cast<long>(rng.uniform_int(-5, 5));
    }
    const long det = mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1]) -
                     mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0]) +
                     mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]);
    if (det == 0) continue;
    std::vector<SparsePoly> lin;
    for (size_t i = 0; i < 3; ++i) {
      SparsePoly l(w);
      for (size_t j = 0; j < 3; ++j) l += SparsePoly::variable(w, j) * Rat(mat[i][j]);
      lin.push_back(std::move(l));
    }
    SparsePoly p = substitute(b3, lin);
    SparsePoly q = substitute(b4, lin);
    if (p.degree_in(2) != 3 || q.degree_in(2) != 4) continue;

    SparsePoly res = resultant(p, q, "w3");
    if (res.is_zero()) {
      throw Error(ErrorKind::ResultantDegenerate, "B_3 and B_4 share a positive-dimensional component");
    }
    PointCount out;
    out.degree = res.degree();
    out.squarefree = res.is_homogeneous() && binary_form_squarefree(res);
    out.attempts = attempt;
    out.resultant = std::move(res);
    return out;
  }
  throw Error(ErrorKind::ResultantDegenerate, "no coordinate change with nonvanishing leading coefficients found");
}

}  // namespace vmrt

#include "vmrt/variation.hpp"

#include "vmrt/eco.hpp"
#include "vmrt/error.hpp"
#include "vmrt/jet.hpp"
#include "vmrt/line_restriction.hpp"

namespace vmrt {

namespace {

std::vector<SparsePoly> normalized_parts(const Hypersurface& h) {
  std::vector<SparsePoly> parts = graded_parts(h.f(), 2 * h.m(), 0);
  if (parts[0].constant_value() != 1) {
    throw Error(ErrorKind::NormalizationViolated,
                "expected f(1,0,...,0) = 1, got " + to_string(parts[0].constant_value()));
  }
  return parts;
}

}  // namespace

MonomialBasis MonomialBasis::make(size_t n, unsigned k) {
  MonomialBasis b;
  b.n = n;
  b.k = k;
  b.monomials = monomials_of_degree(n, k);
  for (size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], i);
  return b;
}

QMatrix coeff_vector(const SparsePoly& p, const MonomialBasis& basis) {
  if (p.nvars() != basis.n) {
    throw Error(ErrorKind::DimensionMismatch, "coeff_vector: form has " + std::to_string(p.nvars()) +
                                                  " variables, basis has " + std::to_string(basis.n));
  }
  if (!p.is_homogeneous(static_cast<int>(basis.k))) {
    throw Error(ErrorKind::DegreeMismatch, "coeff_vector: not a form of degree " + std::to_string(basis.k));
  }
  QMatrix v(basis.size(), 1);
  for (const auto& [e, c] : p.terms()) v(basis.index.at(e), 0) = c;
  return v;
}

QMatrix mu(const Hypersurface& h, const AffinePoint& y) {
  VmrtSystem sys = vmrt_equations(h, y);
  return coeff_vector(sys.B_k(h.m() + 1), MonomialBasis::make(static_cast<size_t>(h.n()), static_cast<unsigned>(h.m() + 1)));
}

QMatrix dmu_lemma(const Hypersurface& h) {
  const int m = h.m();
  const size_t n = static_cast<size_t>(h.n());
  const int k = m + 1;
  std::vector<SparsePoly> f = normalized_parts(h);
  f.emplace_back(f.front().vars());  // f_{2m+1} = 0

  auto fam = build_family(m);
  const std::vector<SparsePoly> low(f.begin() + 1, f.begin() + 1 + m);
  std::vector<SparsePoly> dA_at_f;
  for (int j = 1; j <= m; ++j) dA_at_f.push_back(substitute(fam->dA(k, j), low));

  const MonomialBasis basis = MonomialBasis::make(n, static_cast<unsigned>(k));
  QMatrix out(basis.size(), n);
  for (size_t i = 0; i < n; ++i) {
    const SparsePoly df1 = partial(f[1], i);
    // d/dy_i (a_j / a_0) at the origin
    auto quotient_derivative = [&](int j) { return partial(f[static_cast<size_t>(j + 1)], i) - f[static_cast<size_t>(j)] * df1; };
    SparsePoly col = quotient_derivative(k);
    for (int j = 1; j <= m; ++j) col -= dA_at_f[static_cast<size_t>(j - 1)] * quotient_derivative(j);
    const QMatrix v = coeff_vector(col, basis);
    for (size_t r = 0; r < basis.size(); ++r) out(r, i) = v(r, 0);
  }
  return out;
}

QMatrix dmu_jet(const Hypersurface& h) {
  normalized_parts(h);
  const int m = h.m();
  const size_t n = static_cast<size_t>(h.n());
  const VarList z = direction_vars(n);
  const SparsePoly zero(z);
  const Jet1 one = Jet1::constant(SparsePoly(z, Rat(1)));
  auto fam = build_family(m);
  const MonomialBasis basis = MonomialBasis::make(n, static_cast<unsigned>(m + 1));

  QMatrix out(basis.size(), n);
  for (size_t i = 0; i < n; ++i) {
    // f(1, eps e_i + z): the lambda^k coefficient is the degree-k part in z
    std::vector<Jet1> args{one};
    for (size_t l = 0; l < n; ++l) {
      args.emplace_back(SparsePoly::variable(z, l), l == i ? SparsePoly(z, Rat(1)) : zero);
    }
    const Jet1 restricted = evaluate<Jet1>(h.f(), args, one);
    auto a = [&](int k) {
      return Jet1(homogeneous_part(restricted.value, k), homogeneous_part(restricted.derivative, k));
    };
    const Jet1 a0 = a(0);
    std::vector<Jet1> ratios;
    for (int j = 1; j <= m; ++j) ratios.push_back(a(j) / a0);
    const Jet1 b = a(m + 1) / a0 - evaluate<Jet1>(fam->A_of(m + 1), ratios, one);
    const QMatrix v = coeff_vector(b.derivative, basis);
    for (size_t r = 0; r < basis.size(); ++r) out(r, i) = v(r, 0);
  }
  return out;
}

QMatrix orbit_tangent(const SparsePoly& h, unsigned degree) {
  if (!h.is_homogeneous(static_cast<int>(degree))) {
    throw Error(ErrorKind::DegreeMismatch, "orbit_tangent: not a form of degree " + std::to_string(degree));
  }
  const size_t n = h.nvars();
  const MonomialBasis basis = MonomialBasis::make(n, degree);
  QMatrix out(basis.size(), n * n);
  for (size_t j = 0; j < n; ++j) {
    const SparsePoly dh = partial(h, j);
    for (size_t i = 0; i < n; ++i) {
      const QMatrix v = coeff_vector(SparsePoly::variable(h.vars(), i) * dh, basis);
      for (size_t r = 0; r < basis.size(); ++r) out(r, i * n + j) = v(r, 0);
    }
  }
  return out;
}

VariationReport variation_report(const Hypersurface& h) {
  const QMatrix dmu = dmu_lemma(h);
  const AffinePoint origin = AffinePoint::origin(static_cast<size_t>(h.n()));
  const SparsePoly center = vmrt_equations(h, origin).B_k(h.m() + 1);
  const QMatrix orbit = orbit_tangent(center, static_cast<unsigned>(h.m() + 1));

  VariationReport r{h.n(), h.m(), h};
  r.rank_dmu = rank(dmu);
  r.dim_orbit = rank(orbit);
  r.dim_intersection = span_intersection(dmu, orbit);
  r.maximal = r.rank_dmu == static_cast<size_t>(h.n()) && r.dim_intersection == 0;
  r.basis_size = dmu.rows();
  return r;
}

Hypersurface explicit_family(int n, int m, const Rat& b, const Rat& c) {
  if (n < 4) throw Error(ErrorKind::ParameterRange, "explicit_family: n >= 4 required");
  if (m < 2 || m > n - 1) throw Error(ErrorKind::ParameterRange, "explicit_family: 2 <= m <= n-1 required");
  if (is_zero(b) || is_zero(c)) throw Error(ErrorKind::ParameterRange, "explicit_family: b and c must be nonzero");

  const size_t nv = static_cast<size_t>(n) + 1;
  const VarList t = ambient_vars(static_cast<size_t>(n));
  const unsigned mu = static_cast<unsigned>(m);
  SparsePoly f(t);
  auto mono = [&](std::initializer_list<std::pair<size_t, unsigned>> powers) {
    Exponents e(nv, 0);
    for (auto [i, p] : powers) e[i] += p;
    return e;
  };
  f.add_term(mono({{0, 2 * mu}}), Rat(1));
  for (size_t i = 1; i < nv; ++i) {
    f.add_term(mono({{0, mu - 1}, {i, mu + 1}}), b);
    f.add_term(mono({{i, 2 * mu}}), Rat(1));
  }
  if (m == 2) {
    for (size_t i1 = 1; i1 < nv; ++i1)
      for (size_t i2 = i1 + 1; i2 < nv; ++i2)
        for (size_t i3 = i2 + 1; i3 < nv; ++i3)
          for (size_t i4 = i3 + 1; i4 < nv; ++i4) f.add_term(mono({{i1, 1}, {i2, 1}, {i3, 1}, {i4, 1}}), c);
  } else {
    for (size_t i = 4; i < nv; ++i) f.add_term(mono({{0, mu - 2}, {1, 1}, {2, 1}, {3, 1}, {i, mu - 1}}), c);
  }
  return Hypersurface::make(std::move(f), true);
}

Hypersurface recenter(const Hypersurface& h, const AffinePoint& y) {
  const Rat value = h.value_at(y);
  if (is_zero(value)) throw Error(ErrorKind::BasePointOnBranch, "recenter: f(1, y) = 0");
  const VarList& t = h.f().vars();
  std::vector<SparsePoly> args{SparsePoly::variable(t, 0)};
  for (size_t i = 0; i < y.size(); ++i) {
    args.push_back(SparsePoly::variable(t, i + 1) + SparsePoly::variable(t, 0) * y.coords[i]);
  }
  return Hypersurface::make(substitute(h.f(), args) / value, false);
}

}  // namespace vmrt

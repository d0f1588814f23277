#include <algorithm>

#include "vmrt/error.hpp"
#include "vmrt/uni_poly.hpp"

namespace vmrt {

RatUniPoly operator+(const RatUniPoly& a, const RatUniPoly& b) {
  std::vector<Rat> c(std::max(a.stored_size(), b.stored_size()));
  for (size_t k = 0; k < a.stored_size(); ++k) c[k] += a[k];
  for (size_t k = 0; k < b.stored_size(); ++k) c[k] += b[k];
  return RatUniPoly(std::move(c));
}

RatUniPoly operator-(const RatUniPoly& a) {
  std::vector<Rat> c(a.coeffs());
  for (auto& x : c) x = -x;
  return RatUniPoly(std::move(c));
}

RatUniPoly operator-(const RatUniPoly& a, const RatUniPoly& b) { return a + (-b); }

RatUniPoly operator*(const RatUniPoly& a, const RatUniPoly& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return RatUniPoly();
  std::vector<Rat> c(a.stored_size() + b.stored_size() - 1);
  for (size_t i = 0; i < a.stored_size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.stored_size(); ++j) c[i + j] += a[i] * b[j];
  }
  return RatUniPoly(std::move(c));
}

RatUniPoly operator*(const RatUniPoly& a, const Rat& s) {
  std::vector<Rat> c(a.coeffs());
  for (auto& x : c) x *= s;
  return RatUniPoly(std::move(c));
}

Rat coeff(const RatUniPoly& p, size_t k) { return k < p.stored_size() ? p[k] : Rat(0); }

Rat leading_coeff(const RatUniPoly& p) { return p.is_zero_poly() ? Rat(0) : p.coeffs().back(); }

Rat evaluate(const RatUniPoly& p, const Rat& x) {
  Rat acc(0);
  for (size_t k = p.stored_size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

RatUniPoly derivative(const RatUniPoly& p) {
  if (p.stored_size() <= 1) return RatUniPoly();
  std::vector<Rat> c(p.stored_size() - 1);
  for (size_t k = 1; k < p.stored_size(); ++k) c[k - 1] = p[k] * static_cast<unsigned long>(k);
  return RatUniPoly(std::move(c));
}

RatUniPoly make_monic(const RatUniPoly& p) {
  if (p.is_zero_poly()) return p;
  return p * Rat(1 / leading_coeff(p));
}

RatUniPoly pow(const RatUniPoly& p, unsigned e) {
  RatUniPoly result({Rat(1)});
  RatUniPoly base = p;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::pair<RatUniPoly, RatUniPoly> divmod(const RatUniPoly& a, const RatUniPoly& b) {
  const int db = b.degree();
  if (db < 0) throw Error(ErrorKind::InvalidArgument, "divmod: division by the zero polynomial");
  std::vector<Rat> rem(a.coeffs());
  const int da = a.degree();
  if (da < db) return {RatUniPoly(), a};
  std::vector<Rat> quot(static_cast<size_t>(da - db) + 1);
  const Rat lead = b[static_cast<size_t>(db)];
  for (int k = da; k >= db; --k) {
    const Rat q = rem[static_cast<size_t>(k)] / lead;
    if (is_zero(q)) continue;
    quot[static_cast<size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(k - db + j)] -= q * b[static_cast<size_t>(j)];
  }
  return {RatUniPoly(std::move(quot)), RatUniPoly(std::move(rem))};
}

RatUniPoly exact_quotient(const RatUniPoly& a, const RatUniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw Error(ErrorKind::NotExact, "exact_quotient: nonzero remainder");
  return q;
}

RatUniPoly gcd(const RatUniPoly& a, const RatUniPoly& b) {
  RatUniPoly x = a;
  RatUniPoly y = b;
  while (!y.is_zero_poly()) {
    RatUniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return make_monic(x);
}

SquarefreeFactorization squarefree_factorization(const RatUniPoly& p) {
  if (p.is_zero_poly()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_factorization of the zero polynomial");
  SquarefreeFactorization out;
  out.content = leading_coeff(p);
  if (p.degree() == 0) return out;

  const RatUniPoly one({Rat(1)});
  const RatUniPoly f = make_monic(p);
  const RatUniPoly df = derivative(f);
  const RatUniPoly a0 = gcd(f, df);
  RatUniPoly b = exact_quotient(f, a0);
  RatUniPoly c = exact_quotient(df, a0);
  RatUniPoly d = c - derivative(b);
  for (unsigned i = 1; b.degree() > 0; ++i) {
    RatUniPoly a = gcd(b, d);
    if (a.degree() > 0) out.factors.emplace_back(a, i);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - derivative(b);
  }
  return out;
}

RatUniPoly expand(const SquarefreeFactorization& sf) {
  RatUniPoly r({sf.content});
  for (const auto& [f, m] : sf.factors) r = r * pow(f, m);
  return r;
}

std::optional<RatUniPoly> square_root(const RatUniPoly& p) {
  SquarefreeFactorization sf = squarefree_factorization(p);
  auto root_content = rational_sqrt(sf.content);
  if (!root_content) return std::nullopt;
  RatUniPoly q({*root_content});
  for (const auto& [f, m] : sf.factors) {
    if (m % 2 != 0) return std::nullopt;
    q = q * pow(f, m / 2);
  }
  const Rat q0 = coeff(q, 0);
  const Rat sign_ref = is_zero(q0) ? leading_coeff(q) : q0;
  if (sgn(sign_ref) < 0) q = -q;
  return q;
}

bool is_perfect_square(const RatUniPoly& p) { return square_root(p).has_value(); }

}  // namespace vmrt

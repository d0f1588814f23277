#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "vmrt/rational.hpp"
#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// Univariate polynomial in a formal parameter (lambda); entry k of the
/// coefficient vector multiplies lambda^k.
///
/// Two flavors are used: UniPoly<Rat> is always trimmed so its last stored
/// coefficient is nonzero. UniPoly<SparsePoly> may carry a declared degree
/// bound, in which case all bound+1 slots are stored even when the top ones
/// vanish (a line restriction whose lambda^{2m} coefficient is zero).
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs, int declared_bound = -1)
      : coeffs_(std::move(coeffs)), bound_(declared_bound) {
    if constexpr (std::is_same_v<C, Rat>) {
      trim();
    }
  }

  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](size_t k) const { return coeffs_[k]; }
  size_t stored_size() const { return coeffs_.size(); }
  int declared_bound() const { return bound_; }

  /// Degree after stripping trailing zeros; -1 for the zero polynomial.
  int degree() const {
    for (size_t k = coeffs_.size(); k-- > 0;) {
      if (!is_zero(coeffs_[k])) return static_cast<int>(k);
    }
    return -1;
  }
  bool is_zero_poly() const { return degree() < 0; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
  int bound_ = -1;
};

using RatUniPoly = UniPoly<Rat>;
using PolyUniPoly = UniPoly<SparsePoly>;

// --- arithmetic on the rational flavor -------------------------------------

RatUniPoly operator+(const RatUniPoly& a, const RatUniPoly& b);
RatUniPoly operator-(const RatUniPoly& a, const RatUniPoly& b);
RatUniPoly operator-(const RatUniPoly& a);
RatUniPoly operator*(const RatUniPoly& a, const RatUniPoly& b);
RatUniPoly operator*(const RatUniPoly& a, const Rat& c);

/// Coefficient of lambda^k (zero past the degree).
Rat coeff(const RatUniPoly& p, size_t k);
Rat leading_coeff(const RatUniPoly& p);
Rat evaluate(const RatUniPoly& p, const Rat& x);
RatUniPoly derivative(const RatUniPoly& p);
RatUniPoly make_monic(const RatUniPoly& p);
RatUniPoly pow(const RatUniPoly& p, unsigned e);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<RatUniPoly, RatUniPoly> divmod(const RatUniPoly& a, const RatUniPoly& b);
/// Quotient of an exact division; throws Error(NotExact) on a remainder.
RatUniPoly exact_quotient(const RatUniPoly& a, const RatUniPoly& b);
/// Monic gcd (zero if both inputs are zero).
RatUniPoly gcd(const RatUniPoly& a, const RatUniPoly& b);

struct SquarefreeFactorization {
  Rat content;
  /// Monic, squarefree, pairwise coprime factors with their multiplicity,
  /// multiplicities strictly increasing.
  std::vector<std::pair<RatUniPoly, unsigned>> factors;
};

/// Yun's algorithm: p = content * prod f_i^{m_i}. Throws on the zero
/// polynomial.
SquarefreeFactorization squarefree_factorization(const RatUniPoly& p);

/// Rebuilds content * prod f^m.
RatUniPoly expand(const SquarefreeFactorization& sf);

/// q with q^2 = p, normalized so q(0) > 0 (or, when q(0) = 0, so that the
/// leading coefficient is positive); nullopt if p is not a square in Q[x].
/// Throws on the zero polynomial.
std::optional<RatUniPoly> square_root(const RatUniPoly& p);
bool is_perfect_square(const RatUniPoly& p);

}  // namespace vmrt

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vmrt/rational.hpp"

namespace vmrt {

/// Exponent vector, one slot per ambient variable.
using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded reverse lexicographic order, "greater first": higher total degree
/// wins; on ties the monomial with the smaller exponent in the last
/// differing variable is the larger one.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Ordered list of variable names shared between polynomials. Copies are
/// cheap; equality compares names.
class VarList {
 public:
  VarList();
  explicit VarList(std::vector<std::string> names);

  /// prefix + first, prefix + (first+1), ... (count names).
  static VarList indexed(std::string_view prefix, unsigned first, unsigned count);

  size_t size() const { return names_->size(); }
  const std::string& operator[](size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<size_t> index_of(std::string_view name) const;

  /// The same list with slot `i` removed.
  VarList without(size_t i) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Multivariate polynomial with exact rational coefficients. Terms are kept
/// in grevlex order (greatest first) and zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, Rat, GrevlexGreater>;

  SparsePoly() = default;
  explicit SparsePoly(VarList vars) : vars_(std::move(vars)) {}
  SparsePoly(VarList vars, const Rat& constant);

  static SparsePoly variable(VarList vars, size_t index);
  static SparsePoly term(VarList vars, Exponents exps, const Rat& coeff);

  const VarList& vars() const { return vars_; }
  size_t nvars() const { return vars_.size(); }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rat constant_value() const;
  Rat coeff(const Exponents& e) const;

  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(size_t var) const;
  /// The zero polynomial is homogeneous of every degree.
  bool is_homogeneous(int d) const;
  bool is_homogeneous() const;

  /// Adds c * x^e to the polynomial.
  void add_term(const Exponents& e, const Rat& c);

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const Rat& c);
  SparsePoly& operator/=(const Rat& c);

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const Rat& c) { return a *= c; }
  friend SparsePoly operator*(const Rat& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator/(SparsePoly a, const Rat& c) { return a /= c; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned e) const;

 private:
  void require_same_vars(const SparsePoly& o) const;

  VarList vars_;
  Terms terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }

/// Formal partial derivative.
SparsePoly partial(const SparsePoly& p, size_t var);
SparsePoly partial(const SparsePoly& p, std::string_view var);

/// Sum of the terms of total degree d.
SparsePoly homogeneous_part(const SparsePoly& p, int d);

/// Same coefficients, new names (the counts must agree).
SparsePoly rename(const SparsePoly& p, const VarList& vars);

/// p with x_var replaced by x_var + shift.
SparsePoly taylor_shift(const SparsePoly& p, size_t var, const Rat& shift);

/// p with x_var set to `value`; the slot is removed from the variable list.
SparsePoly specialize(const SparsePoly& p, size_t var, const Rat& value);

/// Coefficients of p as a polynomial in x_var: entry k multiplies x_var^k.
/// When `drop_slot` is set the slot is removed from the variable list,
/// otherwise the coefficients keep p's variables (with exponent 0 there).
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, size_t var, bool drop_slot);

/// q with num = q * den; throws Error(NotExact) if den does not divide num.
SparsePoly exact_divide(const SparsePoly& num, const SparsePoly& den);

/// Evaluates p at args[i] for variable i in any commutative ring R that
/// supports R + R, R * R and R * Rat. `one` fixes the ring's unit (and, via
/// one * 0, its zero). Powers of each argument are computed once.
template <class R>
R evaluate(const SparsePoly& p, std::span<const R> args, const R& one);

/// Substitutes polynomials (sharing one variable list) for p's variables.
SparsePoly substitute(const SparsePoly& p, std::span<const SparsePoly> args);

/// p at a rational point.
Rat evaluate_at(const SparsePoly& p, std::span<const Rat> point);

/// All exponent vectors of total degree `degree` in `nvars` variables, in
/// grevlex order, greatest first.
std::vector<Exponents> monomials_of_degree(size_t nvars, unsigned degree);

}  // namespace vmrt

#include "vmrt/detail/evaluate.inl"

#include "vmrt/sparse_poly.hpp"

#include <algorithm>
#include <numeric>

#include "vmrt/error.hpp"

namespace vmrt {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a);
  unsigned db = total_degree(b);
  if (da != db) return da > db;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// VarList

VarList::VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarList::VarList(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

VarList VarList::indexed(std::string_view prefix, unsigned first, unsigned count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (unsigned i = 0; i < count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(first + i));
  }
  return VarList(std::move(names));
}

std::optional<size_t> VarList::index_of(std::string_view name) const {
  for (size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

VarList VarList::without(size_t i) const {
  std::vector<std::string> names = *names_;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
  return VarList(std::move(names));
}

// ---------------------------------------------------------------------------
// SparsePoly

SparsePoly::SparsePoly(VarList vars, const Rat& constant) : vars_(std::move(vars)) {
  if (!vmrt::is_zero(constant)) terms_.emplace(Exponents(vars_.size(), 0), constant);
}

SparsePoly SparsePoly::variable(VarList vars, size_t index) {
  if (index >= vars.size()) {
    throw Error(ErrorKind::UnknownVariable, "variable index " + std::to_string(index) + " out of range");
  }
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return term(std::move(vars), std::move(e), Rat(1));
}

SparsePoly SparsePoly::term(VarList vars, Exponents exps, const Rat& coeff) {
  if (exps.size() != vars.size()) {
    throw Error(ErrorKind::DimensionMismatch, "monomial length does not match variable count");
  }
  SparsePoly p(std::move(vars));
  if (!vmrt::is_zero(coeff)) p.terms_.emplace(std::move(exps), coeff);
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rat SparsePoly::constant_value() const { return coeff(Exponents(nvars(), 0)); }

Rat SparsePoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int SparsePoly::degree() const {
  // grevlex is degree-compatible, so the first term has maximal degree
  return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
}

int SparsePoly::degree_in(size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
  return d;
}

bool SparsePoly::is_homogeneous(int d) const {
  for (const auto& [e, c] : terms_) {
    if (static_cast<int>(total_degree(e)) != d) return false;
  }
  return true;
}

bool SparsePoly::is_homogeneous() const { return terms_.empty() || is_homogeneous(degree()); }

void SparsePoly::add_term(const Exponents& e, const Rat& c) {
  if (vmrt::is_zero(c)) return;
  if (e.size() != nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "monomial length does not match variable count");
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (vmrt::is_zero(it->second)) terms_.erase(it);
  }
}

void SparsePoly::require_same_vars(const SparsePoly& o) const {
  if (!(vars_ == o.vars_)) {
    throw Error(ErrorKind::VariableMismatch, "polynomials live in different variable lists");
  }
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same_vars(b);
  SparsePoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const size_t n = a.nvars();
  Exponents e(n);
  Rat prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return vmrt::is_zero(kv.second); });
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (vmrt::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly& SparsePoly::operator/=(const Rat& c) {
  if (vmrt::is_zero(c)) throw Error(ErrorKind::InvalidArgument, "division of a polynomial by zero");
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result(vars_, Rat(1));
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// free functions

SparsePoly partial(const SparsePoly& p, size_t var) {
  if (var >= p.nvars()) {
    throw Error(ErrorKind::UnknownVariable, "partial: variable index out of range");
  }
  SparsePoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

SparsePoly partial(const SparsePoly& p, std::string_view var) {
  auto idx = p.vars().index_of(var);
  if (!idx) throw Error(ErrorKind::UnknownVariable, "partial: unknown variable '" + std::string(var) + "'");
  return partial(p, *idx);
}

SparsePoly homogeneous_part(const SparsePoly& p, int d) {
  SparsePoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(total_degree(e)) == d) r.add_term(e, c);
  }
  return r;
}

SparsePoly rename(const SparsePoly& p, const VarList& vars) {
  if (vars.size() != p.nvars()) {
    throw Error(ErrorKind::DimensionMismatch, "rename: variable count changes");
  }
  SparsePoly r(vars);
  for (const auto& [e, c] : p.terms()) r.add_term(e, c);
  return r;
}

SparsePoly taylor_shift(const SparsePoly& p, size_t var, const Rat& shift) {
  if (var >= p.nvars()) throw Error(ErrorKind::UnknownVariable, "taylor_shift: variable index out of range");
  if (vmrt::is_zero(shift)) return p;
  const int dmax = p.degree_in(var);
  std::vector<Rat> spow(static_cast<size_t>(std::max(dmax, 0)) + 1, Rat(1));
  for (size_t k = 1; k < spow.size(); ++k) spow[k] = spow[k - 1] * shift;

  SparsePoly r(p.vars());
  Int binom;
  for (const auto& [e, c] : p.terms()) {
    const unsigned top = e[var];
    Exponents f = e;
    // (x + s)^top = sum_j C(top, j) s^(top-j) x^j
    for (unsigned j = 0; j <= top; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), top, j);
      f[var] = j;
      r.add_term(f, c * Rat(binom) * spow[top - j]);
    }
  }
  return r;
}

SparsePoly specialize(const SparsePoly& p, size_t var, const Rat& value) {
  if (var >= p.nvars()) throw Error(ErrorKind::UnknownVariable, "specialize: variable index out of range");
  SparsePoly r(p.vars().without(var));
  Rat vp;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(var));
    mpz_pow_ui(vp.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
    mpz_pow_ui(vp.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
    r.add_term(f, c * vp);
  }
  return r;
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, size_t var, bool drop_slot) {
  if (var >= p.nvars()) throw Error(ErrorKind::UnknownVariable, "coefficients_in: variable index out of range");
  const VarList vars = drop_slot ? p.vars().without(var) : p.vars();
  const int d = p.degree_in(var);
  std::vector<SparsePoly> out(static_cast<size_t>(std::max(d, 0)) + 1, SparsePoly(vars));
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    if (drop_slot) {
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(var));
    } else {
      f[var] = 0;
    }
    out[e[var]].add_term(f, c);
  }
  return out;
}

SparsePoly exact_divide(const SparsePoly& num, const SparsePoly& den) {
  if (!(num.vars() == den.vars())) {
    throw Error(ErrorKind::VariableMismatch, "exact_divide: polynomials live in different variable lists");
  }
  if (den.is_zero()) throw Error(ErrorKind::InvalidArgument, "exact_divide: division by zero polynomial");
  const auto& [lead_e, lead_c] = *den.terms().begin();
  const size_t n = num.nvars();
  SparsePoly quotient(num.vars());
  SparsePoly rem = num;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().begin();
    Exponents q(n);
    for (size_t i = 0; i < n; ++i) {
      if (re[i] < lead_e[i]) throw Error(ErrorKind::NotExact, "exact_divide: divisor does not divide dividend");
      q[i] = re[i] - lead_e[i];
    }
    SparsePoly t = SparsePoly::term(num.vars(), std::move(q), rc / lead_c);
    rem -= t * den;
    quotient += t;
  }
  return quotient;
}

SparsePoly substitute(const SparsePoly& p, std::span<const SparsePoly> args) {
  if (args.empty()) return p;
  return evaluate<SparsePoly>(p, args, SparsePoly(args.front().vars(), Rat(1)));
}

Rat evaluate_at(const SparsePoly& p, std::span<const Rat> point) {
  return evaluate<Rat>(p, point, Rat(1));
}

}  // namespace vmrt

namespace vmrt {

namespace {

void enumerate(size_t slot, unsigned remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (slot + 1 == cur.size()) {
    cur[slot] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[slot] = e;
    enumerate(slot + 1, remaining - e, cur, out);
  }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(nvars, 0);
  enumerate(0, degree, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace vmrt

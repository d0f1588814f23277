#include "vmrt/line_restriction.hpp"

#include "vmrt/error.hpp"

namespace vmrt {

namespace {

void require_form(const SparsePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "expected a nonzero form");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "expected a homogeneous polynomial");
}

void require_dimension(const SparsePoly& f, size_t n) {
  if (f.nvars() != n + 1) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(n) + " coordinates but f has " +
                                                  std::to_string(f.nvars()) + " variables");
  }
}

}  // namespace

bool Direction::is_zero() const {
  for (const auto& c : coords) {
    if (!vmrt::is_zero(c)) return false;
  }
  return true;
}

VarList direction_vars(size_t n) { return VarList::indexed("z", 1, static_cast<unsigned>(n)); }

std::vector<SparsePoly> graded_parts(const SparsePoly& f, int degree, size_t var) {
  if (degree < 0 || !f.is_homogeneous(degree)) {
    throw Error(ErrorKind::NotHomogeneous, "graded_parts: input is not a form of degree " + std::to_string(degree));
  }
  std::vector<SparsePoly> by_power = coefficients_in(f, var, true);
  std::vector<SparsePoly> parts(static_cast<size_t>(degree) + 1, SparsePoly(f.vars().without(var)));
  for (size_t p = 0; p < by_power.size(); ++p) {
    parts[static_cast<size_t>(degree) - p] = std::move(by_power[p]);
  }
  return parts;
}

PolyUniPoly restrict_to_line(const SparsePoly& f, const AffinePoint& y) {
  require_form(f);
  require_dimension(f, y.size());
  const int d = f.degree();
  // f(1, y + z) expanded in z; its degree-k part is the lambda^k coefficient.
  SparsePoly g = specialize(f, 0, Rat(1));
  for (size_t i = 0; i < y.size(); ++i) g = taylor_shift(g, i, y.coords[i]);
  g = rename(g, direction_vars(y.size()));
  std::vector<SparsePoly> a(static_cast<size_t>(d) + 1, SparsePoly(g.vars()));
  for (const auto& [e, c] : g.terms()) a[total_degree(e)].add_term(e, c);
  return PolyUniPoly(std::move(a), d);
}

RatUniPoly restrict_to_line(const SparsePoly& f, const AffinePoint& y, const Direction& z) {
  require_form(f);
  require_dimension(f, y.size());
  if (z.size() != y.size()) throw Error(ErrorKind::DimensionMismatch, "point and direction sizes differ");
  std::vector<RatUniPoly> args;
  args.reserve(f.nvars());
  args.emplace_back(std::vector<Rat>{Rat(1)});
  for (size_t i = 0; i < y.size(); ++i) args.emplace_back(std::vector<Rat>{y.coords[i], z.coords[i]});
  return evaluate<RatUniPoly>(f, args, RatUniPoly({Rat(1)}));
}

}  // namespace vmrt

#include "vmrt/sampler.hpp"

#include "vmrt/error.hpp"

namespace vmrt {

std::uint64_t Sampler::derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rat Sampler::small_rational(std::int64_t bound) {
  const std::int64_t num = uniform_int(-bound, bound);
  const std::int64_t den = uniform_int(1, bound);
  Rat r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

Rat Sampler::nonzero_rational(std::int64_t bound) {
  Rat r;
  do {
    r = small_rational(bound);
  } while (is_zero(r));
  return r;
}

Rat Sampler::nonzero_integer(std::int64_t bound) {
  std::int64_t v;
  do {
    v = uniform_int(-bound, bound);
  } while (v == 0);
  return Rat(static_cast<long>(v));
}

AffinePoint Sampler::point(size_t n, std::int64_t bound) {
  AffinePoint y;
  for (size_t i = 0; i < n; ++i) y.coords.push_back(small_rational(bound));
  return y;
}

Direction Sampler::direction(size_t n, std::int64_t bound) {
  Direction z;
  do {
    z.coords.clear();
    for (size_t i = 0; i < n; ++i) z.coords.emplace_back(static_cast<long>(uniform_int(-bound, bound)));
  } while (z.is_zero());
  return z;
}

SparsePoly Sampler::form(const VarList& vars, unsigned degree, std::int64_t coeff_bound, unsigned density_percent) {
  SparsePoly p(vars);
  for (const auto& e : monomials_of_degree(vars.size(), degree)) {
    if (density_percent < 100 && !chance(density_percent)) continue;
    p.add_term(e, nonzero_integer(coeff_bound));
  }
  return p;
}

}  // namespace vmrt

#pragma once

#include <cstdint>
#include <random>

#include "vmrt/line_restriction.hpp"
#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// Seeded source of small random integers, rationals and forms. Draws are
/// reproducible across platforms: only raw mt19937_64 output is used, with
/// our own rejection step instead of the standard distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Independent seed for sub-stream `stream` (splitmix64 finalizer).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool chance(unsigned percent) { return uniform_int(0, 99) < percent; }

  /// num/den with |num| <= bound and 1 <= den <= bound.
  Rat small_rational(std::int64_t bound = 100);
  Rat nonzero_rational(std::int64_t bound = 100);
  /// Nonzero integer in [-bound, bound].
  Rat nonzero_integer(std::int64_t bound);

  AffinePoint point(size_t n, std::int64_t bound = 100);
  /// Nonzero direction with integer coordinates in [-bound, bound].
  Direction direction(size_t n, std::int64_t bound = 5);

  /// Form of the given degree; each monomial is kept with probability
  /// `density_percent` and gets a nonzero integer coefficient in
  /// [-coeff_bound, coeff_bound].
  SparsePoly form(const VarList& vars, unsigned degree, std::int64_t coeff_bound = 9,
                  unsigned density_percent = 100);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vmrt

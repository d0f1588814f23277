#include <doctest.h>

#include <functional>

#include "vmrt/eco.hpp"
#include "vmrt/error.hpp"
#include "vmrt/poly_io.hpp"
#include "vmrt/sampler.hpp"
#include "vmrt/variation.hpp"
#include "vmrt/vmrt.hpp"

using namespace vmrt;

namespace {

Hypersurface H(const std::string& text, size_t n, bool enforce = true) {
  return Hypersurface::make(parse_polynomial(text, ambient_vars(n)), enforce);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

CiData random_ci(Sampler& rng, size_t n, int m, std::int64_t bound = 5) {
  CiData c;
  const VarList z = direction_vars(n);
  for (int k = m + 1; k <= 2 * m; ++k) c.b.push_back(rng.form(z, static_cast<unsigned>(k), bound));
  return c;
}

}  // namespace

TEST_CASE("hypersurface validation") {
  CHECK(H("t0^4 + t1^4 + t2^4 + t3^4", 3).m() == 2);
  CHECK(kind_of([] { H("t0^3 + t1^3", 3); }) == ErrorKind::DegreeMismatch);
  CHECK(kind_of([] { H("t0^4 + t1^2", 3); }) == ErrorKind::NotHomogeneous);
  CHECK(kind_of([] { H("0", 3); }) == ErrorKind::ZeroPolynomial);
  CHECK(kind_of([] { H("t0^2 + t1^2", 3); }) == ErrorKind::ParameterRange);
  CHECK(kind_of([] { H("t0^6 + t1^6", 3); }) == ErrorKind::ParameterRange);
  CHECK(H("t0^6 + t1^6", 3, false).m() == 3);
}

TEST_CASE("Fermat quartic at the origin") {
  Hypersurface h = H("t0^4 + t1^4 + t2^4 + t3^4", 3);
  VmrtSystem sys = vmrt_equations(h, AffinePoint::origin(3));
  CHECK(sys.B_k(3).is_zero());
  CHECK(format(sys.B_k(4)) == "z1^4 + z2^4 + z3^4");
  Direction z{{Rat(1), Rat(0), Rat(0)}};
  CHECK_FALSE(is_eco_line(h, AffinePoint::origin(3), z));
  CHECK_FALSE(sys.vanishes_at(z));
}

TEST_CASE("a square has every line ECO and B identically zero") {
  Hypersurface h = H("t0^4 + 2*t0^2*t1^2 + 2*t0^2*t2^2 + 2*t0^2*t3^2 + t1^4 + 2*t1^2*t2^2 + 2*t1^2*t3^2"
                     " + t2^4 + 2*t2^2*t3^2 + t3^4",
                     3);
  Sampler rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    AffinePoint y = rng.point(3, 10);
    VmrtSystem sys = vmrt_equations(h, y);
    for (const auto& b : sys.B) CHECK(b.is_zero());
    CHECK(is_eco_line(h, y, rng.direction(3)));
  }
  CHECK(kind_of([&] { count_vmrt_points(h, AffinePoint::origin(3), 1); }) == ErrorKind::ResultantDegenerate);
}

TEST_CASE("base point on the branch divisor and zero direction") {
  Hypersurface h = H("t0^3*t1 + t1^4 + t2^4 + t3^4", 3);
  const AffinePoint origin = AffinePoint::origin(3);
  CHECK(kind_of([&] { vmrt_equations(h, origin); }) == ErrorKind::BasePointOnBranch);
  CHECK(kind_of([&] { is_eco_line(h, origin, Direction{{Rat(1), Rat(0), Rat(0)}}); }) ==
        ErrorKind::BasePointOnBranch);
  Hypersurface g = H("t0^4 + t1^4 + t2^4 + t3^4", 3);
  CHECK(kind_of([&] { is_eco_line(g, origin, Direction{{Rat(0), Rat(0), Rat(0)}}); }) == ErrorKind::ZeroDirection);
  CHECK(kind_of([&] { vmrt_equations(g, AffinePoint::origin(2)); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("degrees of the VMRT equations") {
  Sampler rng(13);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 4));
    const int m = static_cast<int>(rng.uniform_int(2, n - 1));
    const VarList t = ambient_vars(static_cast<size_t>(n));
    SparsePoly f = rng.form(t, static_cast<unsigned>(2 * m), 5, 40) + SparsePoly::variable(t, 0).pow(static_cast<unsigned>(2 * m));
    Hypersurface h = Hypersurface::make(f);
    AffinePoint y = rng.point(static_cast<size_t>(n), 5);
    if (is_zero(h.value_at(y))) continue;
    VmrtSystem sys = vmrt_equations(h, y);
    REQUIRE(static_cast<int>(sys.B.size()) == m);
    for (int k = m + 1; k <= 2 * m; ++k) CHECK(sys.B_k(k).is_homogeneous(k));
  }
}

TEST_CASE("ECO witnesses are detected by both predicates") {
  Sampler rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 4));
    const int m = static_cast<int>(rng.uniform_int(2, n - 1));
    AffinePoint y = rng.point(static_cast<size_t>(n), 5);
    Direction z = rng.direction(static_cast<size_t>(n));
    Hypersurface h = eco_witness(n, m, y, z, Sampler::derive_seed(17, static_cast<std::uint64_t>(trial)));
    CHECK(is_eco_line(h, y, z));
    CHECK(vmrt_equations(h, y).vanishes_at(z));
    // rescaling the direction keeps the line
    Direction scaled = z;
    for (auto& c : scaled.coords) c *= Rat(-3, 2);
    CHECK(is_eco_line(h, y, scaled));
  }
}

TEST_CASE("the two predicates agree on random lines") {
  Sampler rng(19);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const VarList t = ambient_vars(3);
    SparsePoly f = rng.form(t, 4, 3, 30) + SparsePoly::variable(t, 0).pow(4);
    AffinePoint y = rng.point(3, 3);
    Direction z = rng.direction(3, 2);
    Hypersurface h = Hypersurface::make(f);
    if (is_zero(h.value_at(y))) continue;
    CHECK(is_eco_line(h, y, z) == vmrt_equations(h, y).vanishes_at(z));
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("converse construction round-trips") {
  Sampler rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const size_t n = static_cast<size_t>(rng.uniform_int(3, 5));
    const int m = static_cast<int>(rng.uniform_int(2, static_cast<std::int64_t>(n) - 1));
    CiData c = random_ci(rng, n, m);
    Hypersurface h = build_converse(c);
    CHECK(h.m() == m);
    CHECK(h.value_at(AffinePoint::origin(n)) == 1);
    VmrtSystem sys = vmrt_equations(h, AffinePoint::origin(n));
    CHECK(sys.B == c.b);
  }
  CiData bad;
  const VarList z = direction_vars(3);
  bad.b = {parse_polynomial("z1^3", z), parse_polynomial("z1^3", z)};
  CHECK(kind_of([&] { build_converse(bad); }) == ErrorKind::DegreeMismatch);
}

TEST_CASE("the system is invariant under rescaling f and recentering") {
  Sampler rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    const VarList t = ambient_vars(3);
    SparsePoly f = rng.form(t, 4, 5, 50) + SparsePoly::variable(t, 0).pow(4);
    Hypersurface h = Hypersurface::make(f);
    AffinePoint y = rng.point(3, 4);
    if (is_zero(h.value_at(y))) continue;
    const Rat c = rng.nonzero_rational(9);
    VmrtSystem base = vmrt_equations(h, y);
    CHECK(vmrt_equations(Hypersurface::make(f * c), y).B == base.B);
    CHECK(vmrt_equations(recenter(h, y), AffinePoint::origin(3)).B == base.B);
  }
}

TEST_CASE("projective change of coordinates transports the system") {
  // t_i -> t_i + s t0 (i >= 1) sends [1:y] to [1:y+s]; lines keep their directions.
  Sampler rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const VarList t = ambient_vars(3);
    SparsePoly f = rng.form(t, 4, 5, 50) + SparsePoly::variable(t, 0).pow(4);
    AffinePoint y = rng.point(3, 4);
    AffinePoint s = rng.point(3, 4);
    std::vector<SparsePoly> args{SparsePoly::variable(t, 0)};
    for (size_t i = 0; i < 3; ++i) args.push_back(SparsePoly::variable(t, i + 1) - SparsePoly::variable(t, 0) * s.coords[i]);
    Hypersurface h = Hypersurface::make(f);
    Hypersurface moved = Hypersurface::make(substitute(f, args));
    AffinePoint ys = y;
    for (size_t i = 0; i < 3; ++i) ys.coords[i] += s.coords[i];
    if (is_zero(h.value_at(y))) continue;
    CHECK(vmrt_equations(moved, ys).B == vmrt_equations(h, y).B);
  }
}

TEST_CASE("counting VMRT points of converse quartics") {
  Sampler rng(37);
  int generic = 0;
  for (int trial = 0; trial < 4; ++trial) {
    CiData c = random_ci(rng, 3, 2, 9);
    Hypersurface h = build_converse(c);
    PointCount pc = count_vmrt_points(h, AffinePoint::origin(3), 100 + static_cast<std::uint64_t>(trial));
    CHECK(pc.resultant.is_homogeneous(12));
    if (pc.degree == 12 && pc.squarefree) ++generic;
  }
  CHECK(generic >= 3);
}

TEST_CASE("counting detects a common curve and multiple points") {
  const VarList z = direction_vars(3);
  // common factor z1: a plane of solutions
  CiData curve{{parse_polynomial("z1*z2^2 + z1*z3^2", z), parse_polynomial("z1*z2^3 + z1^4 + z1*z3^3", z)}};
  CHECK(kind_of([&] { count_vmrt_points(build_converse(curve), AffinePoint::origin(3), 3); }) ==
        ErrorKind::ResultantDegenerate);

  // z1^3 and z2^4 meet only at [0:0:1], with multiplicity 12
  CiData fat{{parse_polynomial("z1^3", z), parse_polynomial("z2^4", z)}};
  PointCount pc = count_vmrt_points(build_converse(fat), AffinePoint::origin(3), 3);
  CHECK(pc.degree == 12);
  CHECK_FALSE(pc.squarefree);

  CHECK(kind_of([] { count_vmrt_points(H("t0^6 + t1^6 + t2^6 + t3^6 + t4^6", 4), AffinePoint::origin(4), 1); }) ==
        ErrorKind::ParameterRange);
}

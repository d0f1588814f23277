#include <doctest.h>

#include "vmrt/eco.hpp"
#include "vmrt/error.hpp"
#include "vmrt/poly_io.hpp"
#include "vmrt/sampler.hpp"
#include "vmrt/uni_poly.hpp"

using namespace vmrt;

namespace {

std::vector<Rat> R(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<int> weights(int m) {
  std::vector<int> w;
  for (int i = 1; i <= m; ++i) w.push_back(i);
  return w;
}

}  // namespace

TEST_CASE("certificate polynomials, m = 1") {
  auto fam = build_family(1);
  CHECK(format(fam->A_of(2)) == "1/4*t1^2");
}

TEST_CASE("certificate polynomials, m = 2") {
  auto fam = build_family(2);
  const VarList& t = fam->vars;
  CHECK(fam->G[1] == parse_polynomial("1/2*t1", t));
  CHECK(fam->G[2] == parse_polynomial("1/2*t2 - 1/8*t1^2", t));
  CHECK(fam->A_of(3) == parse_polynomial("-1/8*t1^3 + 1/2*t1*t2", t));
  CHECK(fam->A_of(4) == parse_polynomial("1/64*t1^4 - 1/8*t1^2*t2 + 1/4*t2^2", t));
}

TEST_CASE("certificate polynomials, m = 3") {
  auto fam = build_family(3);
  const VarList& t = fam->vars;
  CHECK(fam->A_of(4) == parse_polynomial("5/64*t1^4 - 3/8*t1^2*t2 + 1/2*t1*t3 + 1/4*t2^2", t));
  CHECK(fam->A_of(5) == parse_polynomial("-1/64*t1^5 + 1/8*t1^3*t2 - 1/8*t1^2*t3 - 1/4*t1*t2^2 + 1/2*t2*t3", t));
  CHECK(fam->A_of(6) ==
        parse_polynomial("1/256*t1^6 - 1/32*t1^4*t2 + 1/16*t1^3*t3 + 1/16*t1^2*t2^2 - 1/4*t1*t2*t3 + 1/4*t3^2", t));
}

TEST_CASE("build_family rejects m < 1 and caches") {
  CHECK_THROWS_AS(build_family(0), Error);
  CHECK(build_family(4).get() == build_family(4).get());
}

TEST_CASE("weighted homogeneity of G_k and A_k") {
  for (int m = 1; m <= 5; ++m) {
    auto fam = build_family(m);
    const auto w = weights(m);
    for (int k = 0; k <= m; ++k) CHECK(is_weighted_homogeneous(fam->G[static_cast<size_t>(k)], k, w));
    for (int k = m + 1; k <= 2 * m; ++k) {
      CHECK(is_weighted_homogeneous(fam->A_of(k), k, w));
      for (int j = 1; j <= m; ++j) CHECK(is_weighted_homogeneous(fam->dA(k, j), k - j, w));
    }
  }
  const VarList t = VarList::indexed("t", 1, 2);
  CHECK_FALSE(is_weighted_homogeneous(parse_polynomial("t1 + t2", t), 1, weights(2)));
}

TEST_CASE("certify: squares and a non-square") {
  auto c = certify(R({4, 6, 4, 1}));
  CHECK(c.pass);
  CHECK(c.sigma == R({2, 1}));
  CHECK(c.residuals == R({0, 0}));

  auto d = certify(R({6, 13, 12, 4}));
  CHECK(d.pass);
  CHECK(d.sigma == R({3, 2}));

  auto e = certify(R({0, 0, 0, 1}));
  CHECK_FALSE(e.pass);
  CHECK(e.residuals == R({0, 1}));

  CHECK_THROWS_AS(certify(R({1, 2, 3})), Error);
  CHECK_THROWS_AS(certify(std::vector<Rat>{}), Error);
}

TEST_CASE("certify agrees with the perfect-square oracle") {
  Sampler rng(41);
  int squares = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 4));
    std::vector<Rat> a;
    if (rng.chance(50)) {
      // (1 + s_1 L + ... + s_m L^m)^2
      std::vector<Rat> s{Rat(1)};
      for (int i = 0; i < m; ++i) s.push_back(rng.small_rational(9));
      RatUniPoly q(s);
      RatUniPoly sq = q * q;
      for (int k = 1; k <= 2 * m; ++k) a.push_back(coeff(sq, static_cast<size_t>(k)));
      auto cert = certify(a);
      REQUIRE(cert.pass);
      CHECK(cert.sigma == std::vector<Rat>(s.begin() + 1, s.end()));
      ++squares;
    } else {
      for (int k = 0; k < 2 * m; ++k) a.push_back(rng.small_rational(9));
    }
    std::vector<Rat> full{Rat(1)};
    full.insert(full.end(), a.begin(), a.end());
    CHECK(certify(a).pass == is_perfect_square(RatUniPoly(full)));
  }
  CHECK(squares > 100);
}

TEST_CASE("certify is equivariant under L -> cL") {
  Sampler rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = static_cast<int>(rng.uniform_int(1, 4));
    std::vector<Rat> a;
    for (int k = 0; k < 2 * m; ++k) a.push_back(rng.small_rational(9));
    const Rat c = rng.nonzero_rational(7);
    std::vector<Rat> scaled = a;
    Rat ck = 1;
    for (auto& x : scaled) {
      ck *= c;
      x *= ck;
    }
    auto base = certify(a);
    auto moved = certify(scaled);
    CHECK(base.pass == moved.pass);
    Rat cj = 1;
    for (size_t j = 0; j < base.sigma.size(); ++j) {
      cj *= c;
      CHECK(moved.sigma[j] == base.sigma[j] * cj);
    }
    Rat cr = 1;
    for (int i = 0; i < m; ++i) cr *= c;
    for (size_t j = 0; j < base.residuals.size(); ++j) {
      cr *= c;
      CHECK(moved.residuals[j] == base.residuals[j] * cr);
    }
  }
}

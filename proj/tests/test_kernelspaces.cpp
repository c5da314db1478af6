#include "hecke2/kernelspaces.hpp"

#include <random>

#include "doctest.h"
#include "hecke2/gf2linalg.hpp"
#include "hecke2/recurrence.hpp"
#include "hecke2/semilinear.hpp"

using namespace hecke2;

TEST_CASE("OddElement r-polynomial and back") {
  const OddElement one{BitPoly::one()};
  CHECK(one.to_r_poly() == BitPoly::from_exponents({2, 1}));  // F+G
  CHECK(one.r_degree() == 2);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    BitPoly g;
    for (std::size_t k = 0; k < 40; ++k)
      if (rng() & 1) g.set(k, true);
    const OddElement e{g};
    const auto back = OddElement::from_r_poly(e.to_r_poly());
    REQUIRE(back.has_value());
    CHECK(*back == e);
    if (!g.is_zero()) CHECK(e.r_degree() == 2 * g.degree() + 2);
  }
  // r^2 is not odd
  CHECK(!OddElement::from_r_poly(BitPoly::monomial(2)).has_value());
  CHECK(!OddElement::from_r_poly(BitPoly::one()).has_value());
}

TEST_CASE("u_plus_i_on_gcoords") {
  CHECK(u_plus_i_on_gcoords(BitPoly::one()).is_zero());          // C_0 = 0
  CHECK(u_plus_i_on_gcoords(BitPoly::monomial(1)) == BitPoly::one());  // C_1
  CHECK(u_plus_i_on_gcoords(BitPoly::from_exponents({4, 2})).is_zero());
}

TEST_CASE("u_plus_i matches U+I on the r-polynomial side") {
  std::mt19937_64 rng(59);
  const UOperator u(130);
  for (int trial = 0; trial < 50; ++trial) {
    BitPoly g;
    for (std::size_t k = 0; k < 30; ++k)
      if (rng() & 1) g.set(k, true);
    const BitPoly f = OddElement{g}.to_r_poly();
    const BitPoly image = u.apply(f) + f;
    const BitPoly expected = OddElement{u_plus_i_on_gcoords(g)}.to_r_poly();
    CHECK(image == expected);
  }
}

TEST_CASE("km_basis small") {
  const auto k0 = km_basis(0);
  REQUIRE(k0.elements.size() == 1);
  CHECK(k0.elements[0].g == BitPoly::one());

  const auto k1 = km_basis(1);
  REQUIRE(k1.elements.size() == 2);
  CHECK(k1.elements[0].g == BitPoly::one());
  CHECK(k1.elements[1].g == BitPoly::from_exponents({4, 2}));

  const auto k2 = km_basis(2);
  REQUIRE(k2.elements.size() == 3);
  CHECK(k2.elements[2].g.degree() == 8);
  for (const auto& e : k2.elements) {
    CHECK(u_plus_i_on_gcoords(e.g).is_zero());
    CHECK(e.g.get(static_cast<std::size_t>(e.g.degree())));
  }
}

TEST_CASE("km_basis dimensions and degrees") {
  for (std::size_t m = 0; m <= 24; ++m) {
    const auto basis = km_basis(m);
    REQUIRE(basis.elements.size() == m + 1);
    for (std::size_t j = 0; j <= m; ++j) {
      CHECK(basis.elements[j].g.degree() == static_cast<long>(4 * j));
      CHECK(u_plus_i_on_gcoords(basis.elements[j].g).is_zero());
    }
  }
}

TEST_CASE("km_basis agrees with the direct matrix kernel") {
  // independent route: kernel_basis on the column matrix of t^j -> C_j
  for (std::size_t m = 0; m <= 8; ++m) {
    const std::size_t count = 4 * m + 4;
    const auto c = c_seq(count - 1);
    BitMatrix map(count, count);
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t i = 0; i < count; ++i)
        if (c[j].get(i)) map.set(i, j, true);
    const auto kernel = reduced_degree_basis(kernel_basis(map));
    const auto basis = km_basis(m);
    REQUIRE(kernel.size() == basis.elements.size());
    for (std::size_t j = 0; j < kernel.size(); ++j)
      CHECK(kernel[j] == basis.elements[j].g);
  }
}

TEST_CASE("A_n satisfies its defining identity through U") {
  // U((r^2+r) r^{2n}) = (r^2+r) A_n(r^2)
  const std::size_t nmax = 60;
  const auto a = a_seq(nmax);
  const UOperator u(2 * nmax + 2);
  const BitPoly base = BitPoly::from_exponents({2, 1});
  for (std::size_t n = 0; n <= nmax; ++n) {
    const BitPoly lhs = u.apply(shifted(base, 2 * n));
    const BitPoly rhs = mul(base, substitute_square(a[n]));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("K_m is contained in K_{m+1}") {
  for (std::size_t m = 0; m < 8; ++m) {
    const auto small = km_basis(m);
    const auto big = km_basis(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
      CHECK(small.elements[j] == big.elements[j]);
  }
}

TEST_CASE("l_basis") {
  const auto l0 = l_basis(0);
  REQUIRE(l0.size() == 3);
  CHECK(l0[0].g == BitPoly::monomial(1));
  CHECK(l0[1].g == BitPoly::from_exponents({1, 0}));
  CHECK(l0[2].g == BitPoly::from_exponents({3, 2}));

  for (std::size_t m = 0; m <= 10; ++m) {
    const auto lb = l_basis(m);
    CHECK(lb.size() == 3 * m + 3);
    for (const auto& e : lb)
      CHECK(e.g.degree() <= static_cast<long>(4 * m + 3));
  }
}

TEST_CASE("U does not stabilize L for m >= 1") {
  // G^3 = G^2 u_0 lies in L, but U(G^3) = F^3 is not a Z/2[G]-combination
  // of u_0, u_1, u_2: its decomposition must use the part of L* outside L.
  const BitPoly g3 = mul(g_of_r(), mul(g_of_r(), g_of_r()));
  const BitPoly f3 = u_apply(g3);
  const auto odd = OddElement::from_r_poly(f3);
  REQUIRE(odd.has_value());
  // g-coordinates of u_i G^{2n} span multiples of the generator degrees only
  const auto lb = l_basis(1);
  DegreeEchelon echelon;
  for (std::size_t i = 0; i < lb.size(); ++i) echelon.insert(lb[i].g, i);
  CHECK(!echelon.reduce(odd->g).residual.is_zero());
}

TEST_CASE("kernel equality of Lemma 2.11") {
  for (std::size_t m = 0; m <= 12; ++m) CHECK(kernel_equality_check(m));
}

TEST_CASE("pr1 shape") {
  for (std::size_t m = 0; m <= 12; ++m) CHECK(pr1_shape_check(m));
}

TEST_CASE("every kernel element lies in N2") {
  for (std::size_t m = 0; m <= 8; ++m) {
    const auto basis = km_basis(m);
    for (const auto& e : basis.elements)
      CHECK(decompose_n2(e.to_r_poly()).has_value());
  }
}

TEST_CASE("pr1 triangularity: element j has monic F-coordinate of degree j") {
  const auto basis = km_basis(10);
  for (std::size_t j = 0; j < basis.elements.size(); ++j) {
    const auto coords = decompose_n2(basis.elements[j].to_r_poly());
    REQUIRE(coords.has_value());
    CHECK(pr1(*coords).degree() == static_cast<long>(j));
  }
}

TEST_CASE("kernel_report") {
  const auto report = kernel_report(3);
  CHECK(report.m == 3);
  CHECK(report.dim == 4);
  CHECK(report.gdegrees == std::vector<std::size_t>{0, 4, 8, 12});
  CHECK(report.lemma211);
  CHECK(report.pr1);
}

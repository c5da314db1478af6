#include "hecke2/semilinear.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace hecke2;

namespace {

BitPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  BitPoly p;
  for (std::size_t k = 0; k <= max_degree; ++k)
    if (rng() & 1) p.set(k, true);
  return p;
}

// oracle for T(F^n): the one-variable recursion tau_{n+4} = s^4 tau_n +
// s tau_{n+1} with seeds 0, 0, 0, s
std::vector<BitPoly> t_recursion(std::size_t nmax) {
  std::vector<BitPoly> tau{BitPoly{}, BitPoly{}, BitPoly{},
                           BitPoly::monomial(1)};
  tau.resize(std::max<std::size_t>(nmax + 1, 4));
  for (std::size_t n = 4; n <= nmax; ++n)
    tau[n] = shifted(tau[n - 4], 4) + shifted(tau[n - 3], 1);
  tau.resize(nmax + 1);
  return tau;
}

}  // namespace

TEST_CASE("constants") {
  CHECK(f_of_r() + g_of_r() == BitPoly::from_exponents({2, 1}));
  const BitPoly f4 = substitute_square(substitute_square(f_of_r()));
  const BitPoly g4 = substitute_square(substitute_square(g_of_r()));
  CHECK((f4 + g4 + mul(f_of_r(), g_of_r())).is_zero());
  CHECK(f_of_r().to_string() == "t^4+t^3+t^2+t");
}

TEST_CASE("monomial table") {
  const auto table = u_monomial_table(6);
  CHECK(table[0] == BitPoly::one());
  CHECK(table[1] == BitPoly::monomial(1));
  CHECK(table[2] == BitPoly::monomial(2));
  CHECK(table[3] == BitPoly::from_exponents({3, 2, 1}));
  CHECK(table[4] == BitPoly::monomial(4));
  CHECK(table[6] == BitPoly::from_exponents({6, 4, 2}));
}

TEST_CASE("u_apply on G, F and F^3") {
  CHECK(u_apply(g_of_r()) == f_of_r());
  CHECK(u_apply(f_of_r()) == g_of_r());
  const BitPoly f3 = mul(f_of_r(), mul(f_of_r(), f_of_r()));
  const BitPoly g3 = mul(g_of_r(), mul(g_of_r(), g_of_r()));
  CHECK(u_apply(f3) == g3 + f_of_r());
}

TEST_CASE("u_apply capacity") {
  const UOperator u(8);
  CHECK_THROWS_AS(u.apply(BitPoly::monomial(9)), std::out_of_range);
  CHECK_THROWS_AS(u.monomial_image(9), std::out_of_range);
  CHECK(u.apply(BitPoly{}).is_zero());
}

TEST_CASE("semi-linearity and Frobenius") {
  std::mt19937_64 rng(41);
  const UOperator u(2 * 128 + 8);
  for (int trial = 0; trial < 300; ++trial) {
    const BitPoly f = random_poly(rng, 128);
    CHECK(u.apply(mul(g_of_r(), f)) == mul(f_of_r(), u.apply(f)));
    CHECK(u.apply(mul(f, f)) == mul(u.apply(f), u.apply(f)));
  }
}

TEST_CASE("U sends G^n to F^n and U(F^n) satisfies the recursion") {
  const std::size_t nmax = 256;
  const UOperator u(4 * nmax);
  std::vector<BitPoly> f_pow{BitPoly::one()};
  std::vector<BitPoly> g_pow{BitPoly::one()};
  for (std::size_t n = 1; n <= nmax; ++n) {
    f_pow.push_back(mul(f_pow.back(), f_of_r()));
    g_pow.push_back(mul(g_pow.back(), g_of_r()));
  }
  std::vector<BitPoly> uf;
  for (std::size_t n = 0; n <= nmax; ++n) {
    CHECK(u.apply(g_pow[n]) == f_pow[n]);
    uf.push_back(u.apply(f_pow[n]));
  }
  for (std::size_t n = 0; n + 4 <= nmax; ++n)
    CHECK(uf[n + 4] == mul(f_pow[4], uf[n]) + mul(f_pow[1], uf[n + 1]));
}

TEST_CASE("alpha") {
  CHECK(alpha_apply(BitPoly::one()) == BitPoly::one());
  CHECK(alpha_apply(BitPoly::monomial(1)) == g_of_r());
  CHECK(alpha_apply(BitPoly::from_exponents({2, 1})) ==
        mul(g_of_r(), g_of_r()) + g_of_r());
}

TEST_CASE("t_apply on small powers") {
  CHECK(t_apply(BitPoly::one()).is_zero());
  CHECK(t_apply(BitPoly::monomial(1)).is_zero());
  CHECK(t_apply(BitPoly::monomial(2)).is_zero());
  CHECK(t_apply(BitPoly::monomial(3)) == f_of_r());
}

TEST_CASE("t_apply against the recursion oracle") {
  const std::size_t nmax = 64;
  const auto tau = t_recursion(nmax);
  const UOperator u(4 * nmax);
  for (std::size_t n = 0; n <= nmax; ++n) {
    const BitPoly image = t_apply(BitPoly::monomial(n), u);
    CHECK(image == compose(tau[n], f_of_r()));
    const auto coeffs = express_in_f_powers(image);
    REQUIRE(coeffs.has_value());
    CHECK(*coeffs == tau[n]);
    // support on F^k with k <= n-2 and k = n mod 2
    for (std::size_t k : tau[n].exponents()) {
      CHECK(k + 2 <= n);
      CHECK(k % 2 == n % 2);
    }
  }
  // T(F^7) = F^5
  CHECK(tau[7] == BitPoly::monomial(5));
}

TEST_CASE("express_in_f_powers rejects non-members") {
  CHECK(!express_in_f_powers(BitPoly::monomial(1)).has_value());
  CHECK(!express_in_f_powers(g_of_r()).has_value());
  CHECK(express_in_f_powers(BitPoly{}) == BitPoly{});
}

TEST_CASE("Lemma 2.8: (U^2+I)(F^i G^k) = F^i T(F^k)") {
  const std::size_t kmax = 32;
  const UOperator u(8 + 4 * kmax);
  BitPoly f_pow = BitPoly::one();
  for (std::size_t i = 0; i <= 2; ++i) {
    BitPoly g_pow = BitPoly::one();
    for (std::size_t k = 0; k <= kmax; ++k) {
      const BitPoly elem = mul(f_pow, g_pow);
      CHECK(u.apply(u.apply(elem)) + elem ==
            mul(f_pow, t_apply(BitPoly::monomial(k), u)));
      g_pow = mul(g_pow, g_of_r());
    }
    f_pow = mul(f_pow, f_of_r());
  }
}

TEST_CASE("decompose_over_g") {
  // r^4 = G + r^3
  const auto d4 = decompose_over_g(BitPoly::monomial(4));
  CHECK(d4.g0 == BitPoly::monomial(1));
  CHECK(d4.g1.is_zero());
  CHECK(d4.g2.is_zero());
  CHECK(d4.g3 == BitPoly::one());
  // r^6 = (r^2+r)G + r^4 = G + r G + r^2 G + r^3
  const auto d6 = decompose_over_g(BitPoly::monomial(6));
  CHECK(d6.g0 == BitPoly::monomial(1));
  CHECK(d6.g1 == BitPoly::monomial(1));
  CHECK(d6.g2 == BitPoly::monomial(1));
  CHECK(d6.g3 == BitPoly::one());
  // F = G + r^2 + r
  const auto df = decompose_over_g(f_of_r());
  CHECK(df.g0 == BitPoly::monomial(1));
  CHECK(df.g1 == BitPoly::one());
  CHECK(df.g2 == BitPoly::one());
  CHECK(df.g3.is_zero());
}

TEST_CASE("decompose_over_g round trip") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const BitPoly f = random_poly(rng, 150);
    CHECK(recompose_over_g(decompose_over_g(f)) == f);
  }
}

TEST_CASE("decompose_n2") {
  const auto dg = decompose_n2(g_of_r());
  REQUIRE(dg.has_value());
  CHECK(dg->c_g == BitPoly::one());
  CHECK(dg->c_f.is_zero());
  CHECK(dg->c_f2g.is_zero());

  const auto dfg = decompose_n2(f_of_r() + g_of_r());
  REQUIRE(dfg.has_value());
  CHECK(dfg->c_g == BitPoly::one());
  CHECK(dfg->c_f == BitPoly::one());
  CHECK(dfg->c_f2g.is_zero());

  // u_2 = (F+G)^2 G = F^2 G + G^3 -> (t, 0, 1)
  const BitPoly fg = f_of_r() + g_of_r();
  const auto du2 = decompose_n2(mul(mul(fg, fg), g_of_r()));
  REQUIRE(du2.has_value());
  CHECK(du2->c_g == BitPoly::monomial(1));
  CHECK(du2->c_f.is_zero());
  CHECK(du2->c_f2g == BitPoly::one());

  CHECK(!decompose_n2(BitPoly::monomial(1)).has_value());
  CHECK(!decompose_n2(BitPoly::one()).has_value());
}

TEST_CASE("decompose_n2 round trip") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    N2Coordinates c{random_poly(rng, 12), random_poly(rng, 12),
                    random_poly(rng, 12)};
    const BitPoly f = recompose_n2(c);
    const auto back = decompose_n2(f);
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
}

TEST_CASE("pr1") {
  CHECK(pr1(*decompose_n2(g_of_r())).is_zero());
  CHECK(pr1(*decompose_n2(f_of_r() + g_of_r())) == BitPoly::one());
  // the K_1 element with g = t^4+t^2, i.e. (r^2+r)(r^8+r^4)
  const BitPoly f = mul(BitPoly::from_exponents({2, 1}),
                        BitPoly::from_exponents({8, 4}));
  const auto coords = decompose_n2(f);
  REQUIRE(coords.has_value());
  CHECK(pr1(*coords) == BitPoly::monomial(1));
}

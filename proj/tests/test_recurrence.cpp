#include "hecke2/recurrence.hpp"

#include "doctest.h"

using namespace hecke2;

TEST_CASE("A_n seeds and first step") {
  const auto a = a_seq(4);
  CHECK(a[0] == BitPoly::one());
  CHECK(a[1] == BitPoly::from_exponents({1, 0}));
  CHECK(a[2] == BitPoly::from_exponents({2, 1}));
  CHECK(a[3] == BitPoly::from_exponents({3, 2}));
  CHECK(a[4] == BitPoly::from_exponents({4, 1}));
}

TEST_CASE("C_n seeds and first steps") {
  const auto c = c_seq(8);
  CHECK(c[0].is_zero());
  CHECK(c[1] == BitPoly::one());
  CHECK(c[2] == BitPoly::monomial(1));
  CHECK(c[3] == BitPoly::monomial(2));
  CHECK(c[4] == BitPoly::monomial(1));
  CHECK(c[5] == BitPoly::monomial(4));
  CHECK(c[8] == BitPoly::monomial(5));
  CHECK(c[5].degree() == 4);
  CHECK(c[8].degree() == 5);
}

TEST_CASE("C_n = A_n + t^n") {
  const std::size_t nmax = 600;
  const auto a = a_seq(nmax);
  const auto c = c_seq(nmax);
  for (std::size_t n = 0; n <= nmax; ++n) {
    CHECK(c[n] == a[n] + BitPoly::monomial(n));
    CHECK(a[n].degree() <= static_cast<long>(n));
  }
}

TEST_CASE("express_c4m small cases") {
  C4mExpresser expresser;
  const auto r0 = expresser.express(0);
  CHECK(r0.support.empty());
  CHECK(r0.verified);

  const auto r1 = expresser.express(1);
  CHECK(r1.support == std::vector<std::size_t>{2});
  CHECK(r1.verified);

  const auto r2 = expresser.express(2);
  CHECK(r2.support == std::vector<std::size_t>{3, 5, 6});
  CHECK(r2.verified);

  // out-of-order queries hit the same cached family
  CHECK(expresser.express(1).support == std::vector<std::size_t>{2});
}

TEST_CASE("express_c4m properties over a range") {
  C4mExpresser expresser;
  const auto c = c_seq(400);
  for (std::size_t m = 0; 4 * m < 400; ++m) {
    const auto report = expresser.express(m);
    CHECK(report.verified);
    BitPoly sum;
    for (std::size_t k : report.support) {
      CHECK(k < 4 * m);
      CHECK(k % 4 != 0);
      sum += c[k];
    }
    CHECK(sum == c[4 * m]);
  }
}

TEST_CASE("degree law") {
  CHECK(degree_law_check(3).pass);
  CHECK(degree_law_check(8).pass);
  const auto report = degree_law_check(800);
  CHECK(report.pass);
  CHECK(!report.first_violation.has_value());
}

TEST_CASE("stream window matches the full sequence") {
  CnStream stream;
  const auto c = c_seq(200);
  for (std::size_t n = 0; n <= 200; ++n) CHECK(stream.next() == c[n]);
}

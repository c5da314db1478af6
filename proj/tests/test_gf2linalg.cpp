#include "hecke2/gf2linalg.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "hecke2/recurrence.hpp"

using namespace hecke2;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows,
                        std::size_t cols) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() & 1) m.set(r, c, true);
  return m;
}

// does M * v == 0, with v as a bit row over the columns
bool annihilates(const BitMatrix& m, const BitPoly& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool dot = false;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.get(r, c) && v.get(c)) dot = !dot;
    if (dot) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("echelonize basics") {
  const BitMatrix id = BitMatrix::identity(3);
  const auto res = echelonize(id);
  CHECK(res.rank == 3);
  CHECK(res.echelon == id);

  BitMatrix two_rows(2, 4);
  two_rows.set(0, 1, true);
  two_rows.set(0, 3, true);
  two_rows.set(1, 1, true);
  two_rows.set(1, 3, true);
  CHECK(echelonize(two_rows).rank == 1);
}

TEST_CASE("echelon of the C_1..C_7 rows has rank 6") {
  // C_4 = C_2, so one dependency
  const auto c = c_seq(7);
  std::vector<BitPoly> rows(c.begin() + 1, c.end());
  const auto res = echelonize(BitMatrix::from_rows(rows, 7));
  CHECK(res.rank == 6);
}

TEST_CASE("echelonize properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 24;
    const std::size_t cols = 1 + rng() % 40;
    const BitMatrix m = random_matrix(rng, rows, cols);
    const auto res = echelonize(m);
    // transform * input == echelon
    BitMatrix check(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      BitPoly acc;
      for (std::size_t j = 0; j < rows; ++j)
        if (res.transform.get(r, j)) acc += m.row_poly(j);
      for (std::size_t c = 0; c < cols; ++c) check.set(r, c, acc.get(c));
    }
    CHECK(check == res.echelon);
    // idempotent on its own output
    const auto again = echelonize(res.echelon);
    CHECK(again.echelon == res.echelon);
    CHECK(again.rank == res.rank);
    // pivot columns strictly increase
    long prev = -1;
    for (std::size_t r = 0; r < res.rank; ++r) {
      CHECK(res.echelon.row_leading_col(r) > prev);
      prev = res.echelon.row_leading_col(r);
    }
    // rank-nullity
    const auto kernel = kernel_basis(m);
    CHECK(res.rank + kernel.size() == cols);
    for (const auto& v : kernel) CHECK(annihilates(m, v));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(BitMatrix(2, 2)).size() == 2);
  CHECK(kernel_basis(BitMatrix::identity(5)).empty());

  // the U+I matrix on L* for m=1: columns C_0..C_7, kernel dim 2
  const auto c = c_seq(7);
  BitMatrix m(8, 8);
  for (std::size_t j = 0; j < 8; ++j)
    for (std::size_t i = 0; i < 8; ++i)
      if (c[j].get(i)) m.set(i, j, true);
  const auto kernel = kernel_basis(m);
  CHECK(kernel.size() == 2);
  for (const auto& v : kernel) CHECK(annihilates(m, v));
}

TEST_CASE("solve") {
  const BitMatrix id = BitMatrix::identity(4);
  const BitPoly v = BitPoly::from_exponents({3, 1});
  CHECK(solve(id, v) == v);

  // t^5 in rows {C_3, C_5, C_6} needs all three
  const auto c = c_seq(6);
  const BitMatrix m = BitMatrix::from_rows({c[3], c[5], c[6]}, 6);
  const auto x = solve(m, BitPoly::monomial(5));
  REQUIRE(x.has_value());
  CHECK(*x == BitPoly::from_exponents({2, 1, 0}));

  // C_4 in rows {C_0..C_3} selects exactly C_2
  const BitMatrix m2 = BitMatrix::from_rows({c[0], c[1], c[2], c[3]}, 4);
  const auto x2 = solve(m2, c[4]);
  REQUIRE(x2.has_value());
  CHECK(*x2 == BitPoly::monomial(2));

  // no solution is a value, dimension mismatch is an error
  CHECK(!solve(BitMatrix::from_rows({c[2]}, 4), BitPoly::one()).has_value());
  CHECK_THROWS_AS(solve(m2, BitPoly::monomial(10)), std::invalid_argument);
}

TEST_CASE("solve reproduces the target on random spans") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 1 + rng() % 16;
    const std::size_t cols = 1 + rng() % 24;
    const BitMatrix m = random_matrix(rng, rows, cols);
    // target inside the span
    BitPoly target;
    for (std::size_t r = 0; r < rows; ++r)
      if (rng() & 1) target += m.row_poly(r);
    const auto x = solve(m, target);
    REQUIRE(x.has_value());
    BitPoly rebuilt;
    for (std::size_t r = 0; r < rows; ++r)
      if (x->get(r)) rebuilt += m.row_poly(r);
    CHECK(rebuilt == target);
  }
}

TEST_CASE("DegreeEchelon tracks combinations of the inserted rows") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BitPoly> inputs;
    DegreeEchelon echelon;
    for (std::size_t i = 0; i < 20; ++i) {
      BitPoly row;
      for (std::size_t k = 0; k < 24; ++k)
        if (rng() & 1) row.set(k, true);
      inputs.push_back(row);
      echelon.insert(row, i);
    }
    for (int probe = 0; probe < 10; ++probe) {
      BitPoly v;
      for (std::size_t k = 0; k < 24; ++k)
        if (rng() & 1) v.set(k, true);
      const auto red = echelon.reduce(v);
      BitPoly rebuilt = red.residual;
      for (std::size_t tag : red.tags) rebuilt += inputs[tag];
      CHECK(rebuilt == v);
    }
  }
}

TEST_CASE("reduced_degree_basis is canonical") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BitPoly> rows;
    for (int i = 0; i < 12; ++i) {
      BitPoly row;
      for (std::size_t k = 0; k < 16; ++k)
        if (rng() & 1) row.set(k, true);
      rows.push_back(row);
    }
    auto basis = reduced_degree_basis(rows);
    // shuffling and mixing rows leaves the canonical basis unchanged
    std::vector<BitPoly> mixed = rows;
    std::shuffle(mixed.begin(), mixed.end(), rng);
    mixed.push_back(mixed[0] + mixed[1]);
    CHECK(reduced_degree_basis(mixed) == basis);
    // strictly increasing degrees, pivots cleared elsewhere
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        CHECK(!basis[j].get(static_cast<std::size_t>(basis[i].degree())));
      }
      if (i + 1 < basis.size()) CHECK(basis[i].degree() < basis[i + 1].degree());
    }
  }
}

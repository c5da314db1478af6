#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hecke2/gf2linalg.hpp"
#include "hecke2/gf2poly.hpp"

namespace hecke2 {

/// Streams C_0 = 0, C_1 = 1, C_2 = t, C_3 = t^2 and
/// C_{n+4} = C_{n+3} + (t^4+t^3+t^2+t) C_n + t^n (t^2+t),
/// keeping only a window of the last four values.
class CnStream {
 public:
  CnStream();
  /// Index of the next value produced.
  std::size_t index() const { return n_; }
  BitPoly next();

 private:
  std::array<BitPoly, 4> window_;
  BitPoly multiplier_;
  std::size_t n_ = 0;
};

/// A_0..A_nmax with A_0..A_3 = 1, t+1, t^2+t, t^3+t^2 and
/// A_{n+4} = A_{n+3} + (t^4+t^3+t^2+t) A_n. Satisfies C_n = A_n + t^n.
std::vector<BitPoly> a_seq(std::size_t nmax);

/// C_0..C_nmax.
std::vector<BitPoly> c_seq(std::size_t nmax);

struct CombinationReport {
  std::size_t m = 0;
  /// k < 4m with k % 4 != 0; XOR of the C_k equals C_{4m}.
  std::vector<std::size_t> support;
  bool verified = false;
};

/// Expresses C_{4m} in the family {C_k : k < 4m, k % 4 != 0}; the family has
/// pairwise distinct degrees k-1, so the support is unique. Streams C_n
/// incrementally and keeps the family rows, so repeated queries share work.
/// Throws std::logic_error if no combination exists.
class C4mExpresser {
 public:
  CombinationReport express(std::size_t m);

 private:
  void extend(std::size_t upto);

  CnStream stream_;
  DegreeEchelon family_;
  std::vector<BitPoly> c4_;  // C_{4j}, indexed by j
};

/// One-shot convenience around C4mExpresser.
CombinationReport express_c4m(std::size_t m);

struct DegreeLawReport {
  bool pass = false;
  std::size_t checked_to = 0;
  std::optional<std::size_t> first_violation;
};

/// Checks degree(C_n) == n-1 iff n % 4 != 0 (and < n-1 otherwise) for all
/// n <= nmax.
DegreeLawReport degree_law_check(std::size_t nmax);

}  // namespace hecke2

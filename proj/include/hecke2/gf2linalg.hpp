#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hecke2/gf2poly.hpp"

namespace hecke2 {

/// Dense GF(2) matrix, rows bit-packed 64 columns per word.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Row i is the coefficient vector of rows[i]; every row must fit in cols.
  static BitMatrix from_rows(const std::vector<BitPoly>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool v);

  void xor_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;
  /// Lowest set column of row r, or -1 when the row is zero.
  long row_leading_col(std::size_t r) const;
  BitPoly row_poly(std::size_t r) const;

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct EchelonResult {
  BitMatrix echelon;    // reduced row-echelon form, pivot columns increasing
  std::size_t rank = 0;
  BitMatrix transform;  // invertible; transform * input == echelon
};

/// Reduced row-echelon form over GF(2) with lowest-index pivot preference.
EchelonResult echelonize(BitMatrix m);

/// Basis of {v : M v = 0}, each vector a bit row of length cols().
std::vector<BitPoly> kernel_basis(const BitMatrix& m);

/// Coefficients x with sum_i x_i * row_i == v, or nullopt when v lies outside
/// the row span. Throws std::invalid_argument when v does not fit in cols().
std::optional<BitPoly> solve(const BitMatrix& m, const BitPoly& v);

/// Streaming row echelon keyed by the *highest* set bit. Stored rows are
/// reduced only against earlier pivots, and each carries the set of input
/// tags whose XOR it equals, so dependency queries report combinations of
/// the original inserted rows.
class DegreeEchelon {
 public:
  struct Reduction {
    BitPoly residual;
    std::vector<std::size_t> tags;  // sorted; residual == v + XOR of tagged inputs
  };

  /// Reduces row against the stored rows and either stores the residual
  /// (returns true) or reports it dependent (returns false).
  bool insert(BitPoly row, std::size_t tag);
  Reduction reduce(BitPoly v) const;

  std::size_t size() const { return size_; }
  bool has_pivot(std::size_t deg) const;
  /// Stored row with the given pivot degree, or nullptr.
  const BitPoly* row_with_degree(std::size_t deg) const;

 private:
  struct Entry {
    BitPoly row;
    std::vector<std::size_t> tags;
  };
  // indexed by pivot degree
  std::vector<std::optional<Entry>> entries_;
  std::size_t size_ = 0;
};

/// Canonical reduced echelon basis of the span, pivoting on the highest set
/// bit: distinct degrees, each pivot cleared from every other row, sorted by
/// increasing degree. Zero rows are dropped.
std::vector<BitPoly> reduced_degree_basis(std::vector<BitPoly> rows);

}  // namespace hecke2

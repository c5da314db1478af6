#include "hecke2/gf2linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hecke2 {

namespace {
constexpr std::size_t kWordBits = 64;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      words_per_row_((cols + kWordBits - 1) / kWordBits),
      bits_(rows * words_per_row_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitPoly>& rows,
                               std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].degree() >= static_cast<long>(cols))
      throw std::invalid_argument("BitMatrix::from_rows: row wider than cols");
    const auto& w = rows[r].words();
    std::copy(w.begin(), w.end(), m.bits_.begin() + r * m.words_per_row_);
  }
  return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_per_row_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = bits_[r * words_per_row_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  if (v)
    w |= mask;
  else
    w &= ~mask;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = bits_.data() + dst * words_per_row_;
  const std::uint64_t* s = bits_.data() + src * words_per_row_;
  for (std::size_t i = 0; i < words_per_row_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(bits_.begin() + a * words_per_row_,
                   bits_.begin() + (a + 1) * words_per_row_,
                   bits_.begin() + b * words_per_row_);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
  const std::uint64_t* p = bits_.data() + r * words_per_row_;
  for (std::size_t i = 0; i < words_per_row_; ++i)
    if (p[i]) return false;
  return true;
}

long BitMatrix::row_leading_col(std::size_t r) const {
  const std::uint64_t* p = bits_.data() + r * words_per_row_;
  for (std::size_t i = 0; i < words_per_row_; ++i)
    if (p[i])
      return static_cast<long>(i * kWordBits +
                               static_cast<std::size_t>(std::countr_zero(p[i])));
  return -1;
}

BitPoly BitMatrix::row_poly(std::size_t r) const {
  return BitPoly::from_words(std::vector<std::uint64_t>(
      bits_.begin() + r * words_per_row_,
      bits_.begin() + (r + 1) * words_per_row_));
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const std::uint64_t* p = bits_.data() + r * words_per_row_;
    for (std::size_t i = 0; i < words_per_row_; ++i) {
      std::uint64_t w = p[i];
      while (w) {
        const std::size_t c =
            i * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        out.set(c, r, true);
      }
    }
  }
  return out;
}

EchelonResult echelonize(BitMatrix m) {
  EchelonResult res;
  const std::size_t nrows = m.rows();
  BitMatrix t = BitMatrix::identity(nrows);
  std::size_t next_row = 0;
  for (std::size_t col = 0; col < m.cols() && next_row < nrows; ++col) {
    std::size_t pivot = nrows;
    for (std::size_t r = next_row; r < nrows; ++r) {
      if (m.get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == nrows) continue;
    m.swap_rows(next_row, pivot);
    t.swap_rows(next_row, pivot);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r != next_row && m.get(r, col)) {
        m.xor_row(r, next_row);
        t.xor_row(r, next_row);
      }
    }
    ++next_row;
  }
  res.rank = next_row;
  res.echelon = std::move(m);
  res.transform = std::move(t);
  return res;
}

std::vector<BitPoly> kernel_basis(const BitMatrix& m) {
  EchelonResult e = echelonize(m);
  std::vector<long> pivot_of_row(e.rank);
  std::vector<bool> is_pivot_col(m.cols(), false);
  for (std::size_t r = 0; r < e.rank; ++r) {
    pivot_of_row[r] = e.echelon.row_leading_col(r);
    is_pivot_col[static_cast<std::size_t>(pivot_of_row[r])] = true;
  }
  std::vector<BitPoly> basis;
  basis.reserve(m.cols() - e.rank);
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot_col[f]) continue;
    BitPoly v;
    v.set(f, true);
    for (std::size_t r = 0; r < e.rank; ++r) {
      if (e.echelon.get(r, f))
        v.set(static_cast<std::size_t>(pivot_of_row[r]), true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitPoly> solve(const BitMatrix& m, const BitPoly& v) {
  if (v.degree() >= static_cast<long>(m.cols()))
    throw std::invalid_argument("solve: v wider than the matrix");
  EchelonResult e = echelonize(m);
  BitPoly residual = v;
  BitPoly combo;  // combination in echelon rows
  for (std::size_t r = 0; r < e.rank; ++r) {
    const auto pivot = static_cast<std::size_t>(e.echelon.row_leading_col(r));
    if (residual.get(pivot)) {
      residual += e.echelon.row_poly(r);
      combo.set(r, true);
    }
  }
  if (!residual.is_zero()) return std::nullopt;
  // Pull back through the transform: x = combo^T * transform.
  BitPoly x;
  for (std::size_t r = 0; r < e.rank; ++r)
    if (combo.get(r)) x += e.transform.row_poly(r);
  return x;
}

bool DegreeEchelon::insert(BitPoly row, std::size_t tag) {
  Reduction red = reduce(std::move(row));
  red.tags.insert(std::lower_bound(red.tags.begin(), red.tags.end(), tag), tag);
  if (red.residual.is_zero()) return false;
  const auto deg = static_cast<std::size_t>(red.residual.degree());
  if (deg >= entries_.size()) entries_.resize(deg + 1);
  entries_[deg] = Entry{std::move(red.residual), std::move(red.tags)};
  ++size_;
  return true;
}

DegreeEchelon::Reduction DegreeEchelon::reduce(BitPoly v) const {
  Reduction red;
  std::vector<std::size_t> acc;
  while (!v.is_zero()) {
    const auto deg = static_cast<std::size_t>(v.degree());
    if (deg >= entries_.size() || !entries_[deg]) break;
    v += entries_[deg]->row;
    const auto& t = entries_[deg]->tags;
    acc.clear();
    std::set_symmetric_difference(red.tags.begin(), red.tags.end(), t.begin(),
                                  t.end(), std::back_inserter(acc));
    red.tags.swap(acc);
  }
  red.residual = std::move(v);
  return red;
}

bool DegreeEchelon::has_pivot(std::size_t deg) const {
  return deg < entries_.size() && entries_[deg].has_value();
}

const BitPoly* DegreeEchelon::row_with_degree(std::size_t deg) const {
  if (!has_pivot(deg)) return nullptr;
  return &entries_[deg]->row;
}

std::vector<BitPoly> reduced_degree_basis(std::vector<BitPoly> rows) {
  // forward pass: land every row on a free pivot degree
  std::vector<std::optional<BitPoly>> by_degree;
  for (BitPoly& row : rows) {
    while (!row.is_zero()) {
      const auto deg = static_cast<std::size_t>(row.degree());
      if (deg >= by_degree.size()) by_degree.resize(deg + 1);
      if (!by_degree[deg]) {
        by_degree[deg] = std::move(row);
        break;
      }
      row += *by_degree[deg];
    }
  }
  // back-substitute, clearing higher pivot bits first so a XOR can only
  // touch bits below the pivot just cleared
  std::vector<BitPoly> basis;
  for (std::size_t d = by_degree.size(); d-- > 0;) {
    if (!by_degree[d]) continue;
    for (std::size_t lower = d; lower-- > 0;) {
      if (by_degree[lower] && by_degree[d]->get(lower))
        *by_degree[d] += *by_degree[lower];
    }
    basis.push_back(std::move(*by_degree[d]));
  }
  std::reverse(basis.begin(), basis.end());
  return basis;
}

}  // namespace hecke2

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke2/gf2poly.hpp"
#include "hecke2/kernelspaces.hpp"
#include "hecke2/qseries.hpp"

namespace hecke2 {

/// A Hecke image reconstructed to something outside the modeled K_m.
struct ImageEscapesModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The grid's linear systems have no solution inside the model; retry with a
/// larger filtration index.
struct InsufficientModel : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// No truncated series in X, Y reproduces the operator on the grid.
struct NoConsistentSeries : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// K_m together with its q-expansions at a working precision and the exact
/// matrices of X = T_7 and Y = T_13 on it. Hecke action is computed in
/// series space, reconstructed to polynomials, and re-verified exactly in
/// g-coordinates, so the matrices are exact. Immutable once built.
class KFiniteModel {
 public:
  /// Requires floor(precision/13) > 8m+2 so images reconstruct.
  KFiniteModel(std::size_t m, std::size_t precision);

  std::size_t m() const { return m_; }
  std::size_t dim() const { return basis_.elements.size(); }
  std::size_t precision() const { return evaluator_.precision(); }
  /// Largest r-degree of a modeled element (8m+2).
  std::size_t k_degree_bound() const { return 8 * m_ + 2; }

  const KmBasis& basis() const { return basis_; }
  const std::vector<QSeries>& series_basis() const { return series_basis_; }
  const REvaluator& evaluator() const { return evaluator_; }
  /// Row j holds the coordinates of T_p(basis element j).
  const std::vector<BitPoly>& x_rows() const { return x_rows_; }
  const std::vector<BitPoly>& y_rows() const { return y_rows_; }

  /// Coordinates of an element of K_m in the basis; throws
  /// ImageEscapesModel when g is outside the span.
  BitPoly coords_of(const BitPoly& g) const;
  OddElement element_of(const BitPoly& coords) const;

  /// T_p in series space followed by exact reconstruction and a K-membership
  /// check. Throws ImageEscapesModel when the image leaves the model.
  OddElement apply_tp(const OddElement& f, std::size_t p) const;
  /// Same, in basis coordinates.
  BitPoly apply_tp_coords(const BitPoly& coords, std::size_t p) const;

  /// XOR of rows over the support of coords (matrix-vector product).
  static BitPoly apply_rows(const std::vector<BitPoly>& rows,
                            const BitPoly& coords);

 private:
  std::size_t m_;
  KmBasis basis_;
  REvaluator evaluator_;
  std::vector<QSeries> series_basis_;
  std::vector<BitPoly> x_rows_;
  std::vector<BitPoly> y_rows_;
};

inline KFiniteModel build_k_model(std::size_t m, std::size_t precision) {
  return KFiniteModel(m, precision);
}

struct GridEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  OddElement element;
  BitPoly coords;
};

/// Partial adapted family m_{i,j}, i+j <= grade, with m_{0,0} = F+G and
/// X m_{i,j} = m_{i-1,j} (0 when i = 0), Y m_{i,j} = m_{i,j-1} (0 when j = 0).
struct AdaptedGrid {
  std::size_t grade = 0;
  std::vector<GridEntry> entries;  // ordered by (i+j, i)

  const GridEntry* find(std::size_t i, std::size_t j) const;
};

/// Builds the grid inside the model; entries are made canonical by clearing
/// the joint-kernel pivots (the m_{0,0} component) from every solution.
/// Throws InsufficientModel when a shift system has no solution.
AdaptedGrid adapted_grid(std::size_t grade, const KFiniteModel& model);

/// Sizes a model for the grade (m = 4*grade+4, doubling on failure) and
/// builds the grid.
struct AdaptedBuild {
  KFiniteModel model;
  AdaptedGrid grid;
};
AdaptedBuild build_adapted(std::size_t grade);

/// Truncation of the series u(X, Y) with T_p = u(T_7, T_13) on K:
/// the exponent pairs (a, b), 1 <= a+b <= grade, with coefficient 1.
struct XYSeries {
  std::size_t p = 0;
  std::size_t grade = 0;
  std::vector<std::pair<std::size_t, std::size_t>> coeffs;
};

/// Determines the coefficients from the grid entries grade by grade and
/// verifies agreement on every entry; throws NoConsistentSeries otherwise.
XYSeries tp_as_xy_series(std::size_t p, std::size_t grade,
                         const KFiniteModel& model, const AdaptedGrid& grid);

/// pr1(T_p f) == T_p(pr1 f) for a grid entry f, both sides computed exactly
/// through N2 coordinates after polynomial reconstruction (p = 7 or 13).
bool pr1_equivariance_check(const KFiniteModel& model, const OddElement& f,
                            std::size_t p);

struct StabilizationReport {
  struct Line {
    std::size_t p = 0;
    std::string check;
    bool pass = false;
  };
  std::vector<Line> lines;
  bool all_pass = true;
};

/// T_p images of random K1 and K5 samples follow the p mod 6 annihilation
/// pattern, N1 is stabilized, and T_5 takes D^5 to D.
StabilizationReport stabilization_checks(const KFiniteModel& model,
                                         const std::vector<std::size_t>& primes,
                                         std::size_t samples,
                                         std::uint64_t seed);

}  // namespace hecke2

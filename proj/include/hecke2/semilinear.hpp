#pragma once

#include <optional>
#include <vector>

#include "hecke2/gf2poly.hpp"

namespace hecke2 {

// F = r(r+1)^3 = r^4+r^3+r^2+r and G = r^3(r+1) = r^4+r^3, as polynomials
// in r. They satisfy F+G = r^2+r and F^4+G^4+FG = 0; Z/2[r] is free over
// Z/2[G] on {1, r, r^2, r^3}.
BitPoly f_of_r();
BitPoly g_of_r();

/// The semi-linear operator U: fixes 1, r, r^2, sends r^3 to r^3+r^2+r and
/// satisfies U(G f) = F U(f), so U(G^n) = F^n. Monomial images follow
/// U(r^{n+4}) = U(r^{n+3}) + F U(r^n); the table is immutable after
/// construction and shareable across threads.
class UOperator {
 public:
  explicit UOperator(std::size_t degree_capacity);

  std::size_t capacity() const { return table_.size() - 1; }
  /// U(r^n); n must be within capacity.
  const BitPoly& monomial_image(std::size_t n) const;
  /// Throws std::out_of_range when degree(f) exceeds the capacity.
  BitPoly apply(const BitPoly& f) const;

 private:
  std::vector<BitPoly> table_;
};

/// Images U(r^0) .. U(r^nmax).
std::vector<BitPoly> u_monomial_table(std::size_t nmax);

/// One-shot U; builds a table sized to f.
BitPoly u_apply(const BitPoly& f);

/// The isomorphism Z/2[F] -> Z/2[G] sending F^n to G^n. The input is the
/// abstract one-variable polynomial; the result is p evaluated at G.
BitPoly alpha_apply(const BitPoly& p);

/// T(p at F) = U(p(F)) + p(G). Lands back in Z/2[F].
BitPoly t_apply(const BitPoly& p);
BitPoly t_apply(const BitPoly& p, const UOperator& u);

/// Coefficients of f in powers of F, or nullopt when f is not in Z/2[F].
std::optional<BitPoly> express_in_f_powers(const BitPoly& f);

/// f = g0(G) + r g1(G) + r^2 g2(G) + r^3 g3(G), the unique decomposition
/// over the module basis {1, r, r^2, r^3}.
struct GDecomposition {
  BitPoly g0, g1, g2, g3;
  friend bool operator==(const GDecomposition&, const GDecomposition&) = default;
};

GDecomposition decompose_over_g(const BitPoly& f);
BitPoly recompose_over_g(const GDecomposition& d);

/// Coordinates over Z/2[G^2] on the N2 basis {G, F, F^2 G}:
/// f = c_g(G^2) G + c_f(G^2) F + c_f2g(G^2) F^2 G.
struct N2Coordinates {
  BitPoly c_g, c_f, c_f2g;
  friend bool operator==(const N2Coordinates&, const N2Coordinates&) = default;
};

/// nullopt when f is outside N2.
std::optional<N2Coordinates> decompose_n2(const BitPoly& f);
BitPoly recompose_n2(const N2Coordinates& c);

/// Projection N2/N1 -> K1/N1 in coordinates: keeps the F coordinate, drops
/// the G coordinate (N1) and the F^2 G coordinate (K5 side).
inline BitPoly pr1(const N2Coordinates& c) { return c.c_f; }

}  // namespace hecke2

#pragma once

#include <optional>
#include <vector>

#include "hecke2/gf2poly.hpp"

namespace hecke2 {

/// An element (r^2+r) g(r^2) of M(odd), stored by its g-polynomial.
/// In these coordinates U+I acts by t^n -> C_n.
struct OddElement {
  BitPoly g;

  BitPoly to_r_poly() const;
  /// 2*degree(g) + 2, or kNegInfinity for zero.
  long r_degree() const;
  static std::optional<OddElement> from_r_poly(const BitPoly& f);

  friend bool operator==(const OddElement&, const OddElement&) = default;
};

/// Image of U+I in g-coordinates: the XOR of C_n over the support of g.
/// Zero exactly when (r^2+r) g(r^2) lies in K.
BitPoly u_plus_i_on_gcoords(const BitPoly& g);

/// Basis of K_m = ker(U+I) on L* = {deg g <= 4m+3}, in reduced degree
/// echelon form; element j has g-degree 4j.
struct KmBasis {
  std::size_t m = 0;
  std::vector<OddElement> elements;
};

/// Throws std::logic_error when the dimension is not m+1 or the g-degrees
/// are not exactly {0, 4, ..., 4m}.
KmBasis km_basis(std::size_t m);

/// The 3m+3 spanning elements u_i G^{2n} of L (u_0, u_1, u_2 = G, F,
/// (F+G)^2 G; 0 <= n <= m) in g-coordinates: g = g_i * (t^4+t^3)^n with
/// g_0, g_1, g_2 = t, t+1, t^3+t^2.
std::vector<OddElement> l_basis(std::size_t m);

/// True when ker (U+I)^2 on span(l_basis(m)) and on L* coincide, with
/// common dimension 2m+2.
bool kernel_equality_check(std::size_t m);

/// True when the top element of km_basis(m) decomposes in N2 with an F
/// coordinate monic of degree m.
bool pr1_shape_check(std::size_t m);

struct KernelReport {
  std::size_t m = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> gdegrees;
  bool lemma211 = false;
  bool pr1 = false;
};

KernelReport kernel_report(std::size_t m);

}  // namespace hecke2

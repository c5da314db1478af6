#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke2/gf2poly.hpp"

namespace hecke2 {

/// Thrown when an operation would leave a series with no valid coefficients.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated power series over GF(2) in x: coefficients 0..precision-1 are
/// exact, nothing is claimed (or stored) beyond them. Operations compute the
/// derivable precision of their result and never more.
class QSeries {
 public:
  QSeries() = default;
  explicit QSeries(std::size_t precision) : precision_(precision) {}

  /// Bits at positions >= precision are masked off.
  static QSeries from_bits(std::vector<std::uint64_t> bits, std::size_t precision);
  static QSeries from_exponents(const std::vector<std::size_t>& exponents,
                                std::size_t precision);

  std::size_t precision() const { return precision_; }
  /// True when every coefficient below the precision is zero.
  bool is_zero() const { return bits_.is_zero(); }
  bool get(std::size_t n) const;
  void set(std::size_t n, bool v);

  std::vector<std::size_t> exponents() const { return bits_.exponents(); }
  /// Lowest set exponent, BitPoly::kNegInfinity when zero.
  long lowest_exponent() const { return bits_.valuation(); }
  /// "x^1+x^9+x^25" with ascending exponents; "0" when zero.
  std::string to_string() const;
  std::string bits_hex() const { return bits_.to_hex(); }

  /// Restricts the claim to a smaller precision.
  QSeries truncated(std::size_t precision) const;

  /// Sum/product, valid to the minimum of the two precisions.
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  /// Coefficient-wise equality below min(precision); the bound itself is
  /// what compare_precision reports.
  friend bool agree(const QSeries& a, const QSeries& b);
  friend std::size_t compare_precision(const QSeries& a, const QSeries& b);

 private:
  void mask();
  BitPoly bits_;
  std::size_t precision_ = 0;
};

bool agree(const QSeries& a, const QSeries& b);
std::size_t compare_precision(const QSeries& a, const QSeries& b);

enum class NamedSeries {
  r,  // sum over n>0 of x^{n^2}+x^{2n^2}+x^{3n^2}+x^{6n^2}
  f,  // sum over odd n>0 of x^{n^2}
  g,  // f(x^3)
  d,  // x+x^25+x^49+... : the exponents n^2 with n odd, 3 ∤ n
};

QSeries series_const(NamedSeries which, std::size_t precision);

/// Coefficient decimation by 2 (resp. 3); result precision floor(N/2)
/// (resp. floor(N/3)). Throws PrecisionError when that is zero.
QSeries u2(const QSeries& s);
QSeries u3(const QSeries& s);

/// T_p = decimation by p plus dilation by p, for primes p > 3; result
/// precision floor(N/p).
QSeries tp(const QSeries& s, std::size_t p);

/// Keeps exponents congruent to i mod 3 (i = 1 or 2); precision unchanged.
QSeries p3i(const QSeries& s, int i);

/// Evaluates polynomials in r as power series, with the powers of r cached
/// up to max_degree at the given precision.
class REvaluator {
 public:
  REvaluator(std::size_t precision, std::size_t max_degree);

  std::size_t precision() const { return precision_; }
  std::size_t max_degree() const { return powers_.size() - 1; }
  const QSeries& r_power(std::size_t k) const;
  QSeries eval(const BitPoly& f) const;

  /// Greedy reconstruction: r^k opens with x^k, so the lowest surviving
  /// exponent names the next monomial. Succeeds iff the residual dies below
  /// the series precision using only degrees <= dmax; requires
  /// dmax < precision(s).
  std::optional<BitPoly> reconstruct(const QSeries& s, std::size_t dmax) const;

 private:
  std::size_t precision_;
  std::vector<QSeries> powers_;
};

QSeries series_of_r_poly(const BitPoly& f, std::size_t precision);
std::optional<BitPoly> r_poly_of_series(const QSeries& s, std::size_t dmax);

/// U_3 agrees with the operator U of the polynomial side: for each n <= nmax
/// compares u3(series of r^n) with the series of U(r^n). Requires
/// floor(precision/3) > 2*nmax.
bool check_u3_equals_u(std::size_t nmax, std::size_t precision);

}  // namespace hecke2

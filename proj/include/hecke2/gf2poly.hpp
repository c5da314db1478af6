#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hecke2 {

/// Dense polynomial over GF(2) in one variable. Coefficients are bit-packed
/// 64 per word, little-endian by exponent: bit k of word k/64 is the
/// coefficient of t^k. Storage is kept normalized (no trailing zero words),
/// so operator== is value equality.
class BitPoly {
 public:
  /// Returned by degree() for the zero polynomial.
  static constexpr long kNegInfinity = -1;

  BitPoly() = default;

  static BitPoly one() { return monomial(0); }
  static BitPoly monomial(std::size_t exponent);
  /// Exponents appearing an even number of times cancel.
  static BitPoly from_exponents(std::initializer_list<std::size_t> exponents);
  static BitPoly from_exponents(const std::vector<std::size_t>& exponents);
  static BitPoly from_words(std::vector<std::uint64_t> words);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  /// Index of the highest set bit, kNegInfinity when zero.
  long degree() const;
  /// Index of the lowest set bit, kNegInfinity when zero.
  long valuation() const;

  bool get(std::size_t exponent) const;
  void set(std::size_t exponent, bool value);
  void flip(std::size_t exponent);

  std::size_t popcount() const;
  std::vector<std::size_t> exponents() const;

  BitPoly& operator+=(const BitPoly& rhs);
  friend BitPoly operator+(BitPoly a, const BitPoly& b) {
    a += b;
    return a;
  }
  friend BitPoly operator*(const BitPoly& a, const BitPoly& b) {
    return mul(a, b);
  }
  friend bool operator==(const BitPoly&, const BitPoly&) = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// "t^6+t^4+1" with descending exponents; "0" for the zero polynomial.
  std::string to_string() const;
  /// Bit sequence as lowercase hex, little-endian by exponent: byte k holds
  /// the coefficients of t^{8k}..t^{8k+7}, t^{8k} in the least significant
  /// bit. Zero polynomial -> "00".
  std::string to_hex() const;

  static BitPoly parse(std::string_view text);
  static BitPoly from_hex(std::string_view hex);

  friend BitPoly add(const BitPoly& a, const BitPoly& b);
  friend BitPoly mul(const BitPoly& a, const BitPoly& b);
  friend BitPoly substitute_square(const BitPoly& g);
  friend BitPoly shifted(const BitPoly& a, std::size_t k);

 private:
  void normalize();
  std::vector<std::uint64_t> words_;
};

BitPoly add(const BitPoly& a, const BitPoly& b);
BitPoly mul(const BitPoly& a, const BitPoly& b);

/// g(t) -> g(t^2): bit 2k of the result is bit k of the input. Equals
/// mul(g, g) in characteristic 2.
BitPoly substitute_square(const BitPoly& g);

/// a * t^k.
BitPoly shifted(const BitPoly& a, std::size_t k);

/// f(x) by Horner.
BitPoly compose(const BitPoly& f, const BitPoly& x);

/// Quotient and remainder of a by b; throws std::invalid_argument for b == 0.
std::pair<BitPoly, BitPoly> divmod(BitPoly a, const BitPoly& b);

inline long degree(const BitPoly& a) { return a.degree(); }

}  // namespace hecke2

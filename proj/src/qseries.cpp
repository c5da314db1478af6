#include "hecke2/qseries.hpp"

#include <algorithm>

#include "hecke2/semilinear.hpp"

namespace hecke2 {

namespace {

constexpr std::size_t kWordBits = 64;

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// words of a bit vector truncated below `precision`
std::vector<std::uint64_t> masked_words(const std::vector<std::uint64_t>& in,
                                        std::size_t precision) {
  const std::size_t nwords = (precision + kWordBits - 1) / kWordBits;
  std::vector<std::uint64_t> out(in.begin(),
                                 in.begin() + std::min(in.size(), nwords));
  out.resize(nwords, 0);
  if (precision % kWordBits != 0 && !out.empty())
    out.back() &= (std::uint64_t{1} << (precision % kWordBits)) - 1;
  return out;
}

}  // namespace

void QSeries::mask() {
  bits_ = BitPoly::from_words(masked_words(bits_.words(), precision_));
}

QSeries QSeries::from_bits(std::vector<std::uint64_t> bits,
                           std::size_t precision) {
  QSeries s(precision);
  s.bits_ = BitPoly::from_words(std::move(bits));
  s.mask();
  return s;
}

QSeries QSeries::from_exponents(const std::vector<std::size_t>& exponents,
                                std::size_t precision) {
  QSeries s(precision);
  for (std::size_t e : exponents)
    if (e < precision) s.bits_.flip(e);
  return s;
}

bool QSeries::get(std::size_t n) const { return bits_.get(n); }

void QSeries::set(std::size_t n, bool v) {
  if (n >= precision_)
    throw std::out_of_range("QSeries::set beyond precision");
  bits_.set(n, v);
}

std::string QSeries::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e : bits_.exponents()) {
    if (!out.empty()) out += '+';
    out += "x^" + std::to_string(e);
  }
  return out;
}

QSeries QSeries::truncated(std::size_t precision) const {
  QSeries s(std::min(precision, precision_));
  s.bits_ = bits_;
  s.mask();
  return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries s(std::min(a.precision_, b.precision_));
  s.bits_ = a.bits_ + b.bits_;
  s.mask();
  return s;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t precision = std::min(a.precision_, b.precision_);
  const QSeries& sparse = a.bits_.popcount() <= b.bits_.popcount() ? a : b;
  const QSeries& dense = a.bits_.popcount() <= b.bits_.popcount() ? b : a;
  const std::size_t nwords = (precision + kWordBits - 1) / kWordBits;
  std::vector<std::uint64_t> out(nwords, 0);
  const auto& dw = dense.bits_.words();
  for (std::size_t shift : sparse.bits_.exponents()) {
    if (shift >= precision) break;
    const std::size_t word_off = shift / kWordBits;
    const unsigned bit_off = static_cast<unsigned>(shift % kWordBits);
    const std::size_t limit = std::min(dw.size(), nwords - word_off);
    if (bit_off == 0) {
      for (std::size_t i = 0; i < limit; ++i) out[word_off + i] ^= dw[i];
    } else {
      for (std::size_t i = 0; i < limit; ++i) {
        out[word_off + i] ^= dw[i] << bit_off;
        if (word_off + i + 1 < nwords)
          out[word_off + i + 1] ^= dw[i] >> (kWordBits - bit_off);
      }
    }
  }
  return QSeries::from_bits(std::move(out), precision);
}

bool agree(const QSeries& a, const QSeries& b) {
  const std::size_t bound = compare_precision(a, b);
  const auto wa = masked_words(a.bits_.words(), bound);
  const auto wb = masked_words(b.bits_.words(), bound);
  return wa == wb;
}

std::size_t compare_precision(const QSeries& a, const QSeries& b) {
  return std::min(a.precision_, b.precision_);
}

QSeries series_const(NamedSeries which, std::size_t precision) {
  if (precision < 1)
    throw std::invalid_argument("series_const: precision must be >= 1");
  QSeries s(precision);
  switch (which) {
    case NamedSeries::r:
      for (std::size_t n = 1; n * n < precision; ++n) {
        for (std::size_t mult : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                                 std::size_t{6}}) {
          const std::size_t e = mult * n * n;
          if (e < precision) s.set(e, true);
        }
      }
      break;
    case NamedSeries::f:
      for (std::size_t n = 1; n * n < precision; n += 2) s.set(n * n, true);
      break;
    case NamedSeries::g:
      for (std::size_t n = 1; 3 * n * n < precision; n += 2)
        s.set(3 * n * n, true);
      break;
    case NamedSeries::d:
      for (std::size_t n = 1; n * n < precision; n += 2)
        if (n % 3 != 0) s.set(n * n, true);
      break;
  }
  return s;
}

namespace {

QSeries decimate(const QSeries& s, std::size_t p, const char* op) {
  const std::size_t out_precision = s.precision() / p;
  if (out_precision == 0)
    throw PrecisionError(std::string(op) + ": precision exhausted");
  QSeries out(out_precision);
  for (std::size_t n = 0; n < out_precision; ++n)
    if (s.get(p * n)) out.set(n, true);
  return out;
}

}  // namespace

QSeries u2(const QSeries& s) { return decimate(s, 2, "u2"); }
QSeries u3(const QSeries& s) { return decimate(s, 3, "u3"); }

QSeries tp(const QSeries& s, std::size_t p) {
  if (p <= 3 || !is_prime(p))
    throw std::invalid_argument("tp: p must be a prime > 3");
  QSeries out = decimate(s, p, "tp");
  // dilation branch, written only below the output precision
  for (std::size_t n = 0; p * n < out.precision(); ++n)
    if (s.get(n)) out.set(p * n, !out.get(p * n));
  return out;
}

QSeries p3i(const QSeries& s, int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("p3i: i must be 1 or 2");
  QSeries out(s.precision());
  for (std::size_t e : s.exponents())
    if (e % 3 == static_cast<std::size_t>(i)) out.set(e, true);
  return out;
}

REvaluator::REvaluator(std::size_t precision, std::size_t max_degree)
    : precision_(precision) {
  if (precision < 1)
    throw std::invalid_argument("REvaluator: precision must be >= 1");
  powers_.reserve(max_degree + 1);
  QSeries one(precision);
  one.set(0, true);
  powers_.push_back(std::move(one));
  if (max_degree >= 1) {
    const QSeries r = series_const(NamedSeries::r, precision);
    for (std::size_t k = 1; k <= max_degree; ++k)
      powers_.push_back(powers_.back() * r);
  }
}

const QSeries& REvaluator::r_power(std::size_t k) const {
  if (k >= powers_.size())
    throw std::out_of_range("REvaluator: power beyond max_degree");
  return powers_[k];
}

QSeries REvaluator::eval(const BitPoly& f) const {
  QSeries out(precision_);
  for (std::size_t k : f.exponents()) out = out + r_power(k);
  return out;
}

std::optional<BitPoly> REvaluator::reconstruct(const QSeries& s,
                                               std::size_t dmax) const {
  if (dmax >= s.precision())
    throw std::invalid_argument("reconstruct: dmax must be < precision");
  if (dmax > max_degree())
    throw std::out_of_range("reconstruct: dmax beyond max_degree");
  QSeries residual = s;
  BitPoly f;
  while (!residual.is_zero()) {
    const auto k = static_cast<std::size_t>(residual.lowest_exponent());
    if (k > dmax) return std::nullopt;
    residual = residual + r_power(k);
    f.set(k, true);
  }
  return f;
}

QSeries series_of_r_poly(const BitPoly& f, std::size_t precision) {
  if (f.is_zero()) return QSeries(precision);
  return REvaluator(precision, static_cast<std::size_t>(f.degree())).eval(f);
}

std::optional<BitPoly> r_poly_of_series(const QSeries& s, std::size_t dmax) {
  return REvaluator(s.precision(), dmax).reconstruct(s, dmax);
}

bool check_u3_equals_u(std::size_t nmax, std::size_t precision) {
  if (precision / 3 <= 2 * nmax)
    throw std::invalid_argument(
        "check_u3_equals_u: floor(precision/3) must exceed 2*nmax");
  const REvaluator ev(precision, nmax);
  const auto table = u_monomial_table(nmax);
  for (std::size_t n = 0; n <= nmax; ++n)
    if (!agree(u3(ev.r_power(n)), ev.eval(table[n]))) return false;
  return true;
}

}  // namespace hecke2

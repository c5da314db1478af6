#include "hecke2/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace hecke2 {

namespace {

constexpr std::size_t kWordBits = 64;

// bit i -> bit 2i
std::uint64_t spread_bits(std::uint32_t x) {
  std::uint64_t v = x;
  v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
  v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
  v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst,
                 const std::vector<std::uint64_t>& src, std::size_t shift) {
  if (src.empty()) return;
  const std::size_t word_off = shift / kWordBits;
  const unsigned bit_off = static_cast<unsigned>(shift % kWordBits);
  const std::size_t need = word_off + src.size() + (bit_off ? 1 : 0);
  if (dst.size() < need) dst.resize(need, 0);
  if (bit_off == 0) {
    for (std::size_t i = 0; i < src.size(); ++i) dst[word_off + i] ^= src[i];
  } else {
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[word_off + i] ^= src[i] << bit_off;
      dst[word_off + i + 1] ^= src[i] >> (kWordBits - bit_off);
    }
  }
}

}  // namespace

BitPoly BitPoly::monomial(std::size_t exponent) {
  BitPoly p;
  p.set(exponent, true);
  return p;
}

BitPoly BitPoly::from_exponents(std::initializer_list<std::size_t> exponents) {
  BitPoly p;
  for (std::size_t e : exponents) p.flip(e);
  return p;
}

BitPoly BitPoly::from_exponents(const std::vector<std::size_t>& exponents) {
  BitPoly p;
  for (std::size_t e : exponents) p.flip(e);
  return p;
}

BitPoly BitPoly::from_words(std::vector<std::uint64_t> words) {
  BitPoly p;
  p.words_ = std::move(words);
  p.normalize();
  return p;
}

void BitPoly::normalize() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

long BitPoly::degree() const {
  if (words_.empty()) return kNegInfinity;
  const std::size_t top = words_.size() - 1;
  return static_cast<long>(top * kWordBits +
                           (kWordBits - 1 - std::countl_zero(words_[top])));
}

long BitPoly::valuation() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i])
      return static_cast<long>(i * kWordBits +
                               static_cast<std::size_t>(std::countr_zero(words_[i])));
  return kNegInfinity;
}

bool BitPoly::get(std::size_t exponent) const {
  const std::size_t w = exponent / kWordBits;
  if (w >= words_.size()) return false;
  return (words_[w] >> (exponent % kWordBits)) & 1;
}

void BitPoly::set(std::size_t exponent, bool value) {
  const std::size_t w = exponent / kWordBits;
  if (value) {
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (exponent % kWordBits);
  } else {
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (exponent % kWordBits));
    normalize();
  }
}

void BitPoly::flip(std::size_t exponent) {
  const std::size_t w = exponent / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (exponent % kWordBits);
  normalize();
}

std::size_t BitPoly::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> BitPoly::exponents() const {
  std::vector<std::size_t> out;
  out.reserve(popcount());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

BitPoly& BitPoly::operator+=(const BitPoly& rhs) {
  if (words_.size() < rhs.words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  normalize();
  return *this;
}

BitPoly add(const BitPoly& a, const BitPoly& b) {
  BitPoly out = a;
  out += b;
  return out;
}

BitPoly mul(const BitPoly& a, const BitPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Iterate set bits of the sparser operand.
  const BitPoly& sparse = a.popcount() <= b.popcount() ? a : b;
  const BitPoly& dense = a.popcount() <= b.popcount() ? b : a;
  BitPoly out;
  out.words_.resize(sparse.words_.size() + dense.words_.size(), 0);
  for (std::size_t i = 0; i < sparse.words_.size(); ++i) {
    std::uint64_t w = sparse.words_[i];
    while (w) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(w));
      w &= w - 1;
      xor_shifted(out.words_, dense.words_, i * kWordBits + j);
    }
  }
  out.normalize();
  return out;
}

BitPoly substitute_square(const BitPoly& g) {
  BitPoly out;
  out.words_.resize(g.words_.size() * 2, 0);
  for (std::size_t i = 0; i < g.words_.size(); ++i) {
    out.words_[2 * i] = spread_bits(static_cast<std::uint32_t>(g.words_[i]));
    out.words_[2 * i + 1] =
        spread_bits(static_cast<std::uint32_t>(g.words_[i] >> 32));
  }
  out.normalize();
  return out;
}

BitPoly shifted(const BitPoly& a, std::size_t k) {
  BitPoly out;
  xor_shifted(out.words_, a.words_, k);
  out.normalize();
  return out;
}

BitPoly compose(const BitPoly& f, const BitPoly& x) {
  if (f.is_zero()) return {};
  BitPoly acc;
  for (long k = f.degree(); k >= 0; --k) {
    if (!acc.is_zero()) acc = mul(acc, x);
    if (f.get(static_cast<std::size_t>(k))) acc += BitPoly::one();
  }
  return acc;
}

std::pair<BitPoly, BitPoly> divmod(BitPoly a, const BitPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero");
  BitPoly q;
  const long db = b.degree();
  while (a.degree() >= db) {
    const std::size_t k = static_cast<std::size_t>(a.degree() - db);
    q.flip(k);
    a += shifted(b, k);
  }
  return {std::move(q), std::move(a)};
}

std::string BitPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const auto exps = exponents();
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (!out.empty()) out += '+';
    if (*it == 0) {
      out += '1';
    } else if (*it == 1) {
      out += 't';
    } else {
      out += "t^" + std::to_string(*it);
    }
  }
  return out;
}

std::string BitPoly::to_hex() const {
  if (is_zero()) return "00";
  static const char digits[] = "0123456789abcdef";
  const std::size_t nbytes = static_cast<std::size_t>(degree()) / 8 + 1;
  std::string out;
  out.reserve(nbytes * 2);
  for (std::size_t i = 0; i < nbytes; ++i) {
    const std::uint64_t w = words_[i / 8];
    const unsigned byte = static_cast<unsigned>((w >> ((i % 8) * 8)) & 0xff);
    out += digits[byte >> 4];
    out += digits[byte & 0xf];
  }
  return out;
}

BitPoly BitPoly::parse(std::string_view text) {
  BitPoly out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    if (!expect_term) {
      if (text[pos] != '+')
        throw std::invalid_argument("BitPoly::parse: expected '+' in \"" +
                                    std::string(text) + "\"");
      ++pos;
      skip_ws();
    }
    if (pos == text.size())
      throw std::invalid_argument("BitPoly::parse: trailing '+'");
    if (text[pos] == '0') {
      ++pos;
    } else if (text[pos] == '1') {
      out.flip(0);
      ++pos;
    } else if (text[pos] == 't') {
      ++pos;
      std::size_t exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        auto [next, ec] = std::from_chars(begin, end, exponent);
        if (ec != std::errc{} || next == begin)
          throw std::invalid_argument("BitPoly::parse: bad exponent");
        pos += static_cast<std::size_t>(next - begin);
      }
      out.flip(exponent);
    } else {
      throw std::invalid_argument("BitPoly::parse: unexpected character in \"" +
                                  std::string(text) + "\"");
    }
    expect_term = false;
  }
  if (expect_term) throw std::invalid_argument("BitPoly::parse: empty input");
  return out;
}

BitPoly BitPoly::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0)
    throw std::invalid_argument("BitPoly::from_hex: odd-length hex string");
  auto nibble = [](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("BitPoly::from_hex: bad hex digit");
  };
  BitPoly out;
  out.words_.resize(hex.size() / 16 + 1, 0);
  for (std::size_t i = 0; i * 2 < hex.size(); ++i) {
    const std::uint64_t byte = nibble(hex[2 * i]) * 16 + nibble(hex[2 * i + 1]);
    out.words_[i / 8] |= byte << ((i % 8) * 8);
  }
  out.normalize();
  return out;
}

}  // namespace hecke2

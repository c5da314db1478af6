#include "hecke2/recurrence.hpp"

#include <stdexcept>

namespace hecke2 {

CnStream::CnStream()
    : window_{BitPoly{}, BitPoly::one(), BitPoly::monomial(1),
              BitPoly::monomial(2)},
      multiplier_(BitPoly::from_exponents({4, 3, 2, 1})) {}

BitPoly CnStream::next() {
  if (n_ < 4) return window_[n_++];
  // C_n = C_{n-1} + (t^4+t^3+t^2+t) C_{n-4} + t^{n-4}(t^2+t)
  BitPoly c = window_[3] + mul(multiplier_, window_[0]);
  c.flip(n_ - 2);
  c.flip(n_ - 3);
  window_[0] = std::move(window_[1]);
  window_[1] = std::move(window_[2]);
  window_[2] = std::move(window_[3]);
  window_[3] = std::move(c);
  ++n_;
  return window_[3];
}

std::vector<BitPoly> a_seq(std::size_t nmax) {
  std::vector<BitPoly> a;
  a.reserve(nmax + 1);
  a.push_back(BitPoly::one());
  if (nmax >= 1) a.push_back(BitPoly::from_exponents({1, 0}));
  if (nmax >= 2) a.push_back(BitPoly::from_exponents({2, 1}));
  if (nmax >= 3) a.push_back(BitPoly::from_exponents({3, 2}));
  const BitPoly multiplier = BitPoly::from_exponents({4, 3, 2, 1});
  for (std::size_t n = 4; n <= nmax; ++n)
    a.push_back(a[n - 1] + mul(multiplier, a[n - 4]));
  return a;
}

std::vector<BitPoly> c_seq(std::size_t nmax) {
  CnStream stream;
  std::vector<BitPoly> c;
  c.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) c.push_back(stream.next());
  return c;
}

void C4mExpresser::extend(std::size_t upto) {
  while (stream_.index() <= upto) {
    const std::size_t n = stream_.index();
    BitPoly c = stream_.next();
    if (n % 4 == 0) {
      c4_.push_back(std::move(c));
    } else {
      // degree n-1 is always a fresh pivot, so the row is stored as-is
      if (!family_.insert(std::move(c), n))
        throw std::logic_error(
            "C4mExpresser: dependency inside the restricted family");
    }
  }
}

CombinationReport C4mExpresser::express(std::size_t m) {
  extend(4 * m);
  CombinationReport report;
  report.m = m;
  const BitPoly& target = c4_[m];
  auto red = family_.reduce(target);
  if (!red.residual.is_zero())
    throw std::logic_error("C4mExpresser: C_{4m} not expressible");
  report.support = std::move(red.tags);
  BitPoly recombined;
  for (std::size_t k : report.support) {
    const BitPoly* row = family_.row_with_degree(k - 1);
    if (row == nullptr)
      throw std::logic_error("C4mExpresser: missing family row");
    recombined += *row;
  }
  report.verified = recombined == target;
  return report;
}

CombinationReport express_c4m(std::size_t m) {
  C4mExpresser expresser;
  return expresser.express(m);
}

DegreeLawReport degree_law_check(std::size_t nmax) {
  DegreeLawReport report;
  report.checked_to = nmax;
  CnStream stream;
  for (std::size_t n = 0; n <= nmax; ++n) {
    const BitPoly c = stream.next();
    const long deg = c.degree();
    // the zero polynomial (degree "-infinity") satisfies the < n-1 branch
    const bool ok = (n % 4 != 0)
                        ? deg == static_cast<long>(n) - 1
                        : c.is_zero() || deg < static_cast<long>(n) - 1;
    if (!ok) {
      report.first_violation = n;
      report.pass = false;
      return report;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace hecke2

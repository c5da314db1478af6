#include "hecke2/semilinear.hpp"

#include <array>
#include <stdexcept>

#include "hecke2/gf2linalg.hpp"

namespace hecke2 {

BitPoly f_of_r() { return BitPoly::from_exponents({4, 3, 2, 1}); }
BitPoly g_of_r() { return BitPoly::from_exponents({4, 3}); }

UOperator::UOperator(std::size_t degree_capacity) {
  table_.reserve(degree_capacity + 1);
  table_.push_back(BitPoly::one());
  if (degree_capacity >= 1) table_.push_back(BitPoly::monomial(1));
  if (degree_capacity >= 2) table_.push_back(BitPoly::monomial(2));
  if (degree_capacity >= 3) table_.push_back(BitPoly::from_exponents({3, 2, 1}));
  const BitPoly f = f_of_r();
  for (std::size_t n = 4; n <= degree_capacity; ++n)
    table_.push_back(table_[n - 1] + mul(f, table_[n - 4]));
}

const BitPoly& UOperator::monomial_image(std::size_t n) const {
  if (n >= table_.size())
    throw std::out_of_range("UOperator: monomial beyond capacity");
  return table_[n];
}

BitPoly UOperator::apply(const BitPoly& f) const {
  if (f.degree() >= static_cast<long>(table_.size()))
    throw std::out_of_range("UOperator: input degree beyond capacity");
  BitPoly out;
  for (std::size_t n : f.exponents()) out += table_[n];
  return out;
}

std::vector<BitPoly> u_monomial_table(std::size_t nmax) {
  UOperator u(nmax);
  std::vector<BitPoly> out;
  out.reserve(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) out.push_back(u.monomial_image(n));
  return out;
}

BitPoly u_apply(const BitPoly& f) {
  if (f.is_zero()) return {};
  return UOperator(static_cast<std::size_t>(f.degree())).apply(f);
}

BitPoly alpha_apply(const BitPoly& p) { return compose(p, g_of_r()); }

BitPoly t_apply(const BitPoly& p, const UOperator& u) {
  return u.apply(compose(p, f_of_r())) + compose(p, g_of_r());
}

BitPoly t_apply(const BitPoly& p) {
  if (p.is_zero()) return {};
  UOperator u(4 * static_cast<std::size_t>(p.degree()));
  return t_apply(p, u);
}

std::optional<BitPoly> express_in_f_powers(const BitPoly& f) {
  // Powers of F have distinct degrees 4k, so greedy peeling is exact.
  std::vector<BitPoly> powers{BitPoly::one()};
  const BitPoly f_r = f_of_r();
  BitPoly residual = f;
  BitPoly coeffs;
  while (!residual.is_zero()) {
    const long d = residual.degree();
    if (d % 4 != 0) return std::nullopt;
    const auto k = static_cast<std::size_t>(d / 4);
    while (powers.size() <= k) powers.push_back(mul(powers.back(), f_r));
    residual += powers[k];
    coeffs.set(k, true);
  }
  return coeffs;
}

GDecomposition decompose_over_g(const BitPoly& f) {
  // G-adic expansion by repeated division by G = r^4+r^3 (monic, so the
  // division is plain shift-XOR).
  GDecomposition out;
  std::array<BitPoly*, 4> slot{&out.g0, &out.g1, &out.g2, &out.g3};
  const BitPoly g = g_of_r();
  BitPoly rest = f;
  for (std::size_t power = 0; !rest.is_zero(); ++power) {
    auto [q, rem] = divmod(std::move(rest), g);
    for (std::size_t i = 0; i < 4; ++i)
      if (rem.get(i)) slot[i]->set(power, true);
    rest = std::move(q);
  }
  return out;
}

BitPoly recompose_over_g(const GDecomposition& d) {
  const BitPoly g = g_of_r();
  BitPoly out = compose(d.g0, g);
  out += shifted(compose(d.g1, g), 1);
  out += shifted(compose(d.g2, g), 2);
  out += shifted(compose(d.g3, g), 3);
  return out;
}

std::optional<N2Coordinates> decompose_n2(const BitPoly& f) {
  if (f.is_zero()) return N2Coordinates{};
  const BitPoly g = g_of_r();
  const BitPoly g2 = substitute_square(g);  // G^2 = r^8+r^6
  const std::array<BitPoly, 3> gens{g, f_of_r(), mul(mul(f_of_r(), f_of_r()), g)};
  // Rows G^{2n} * gen; n_max generous since leading terms can cancel.
  const std::size_t n_max = static_cast<std::size_t>(f.degree()) / 8 + 1;
  std::vector<BitPoly> rows;
  rows.reserve(3 * (n_max + 1));
  BitPoly g2n = BitPoly::one();
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const BitPoly& gen : gens) rows.push_back(mul(g2n, gen));
    g2n = mul(g2n, g2);
  }
  const std::size_t cols =
      static_cast<std::size_t>(std::max(f.degree(), rows.back().degree())) + 1;
  const auto x = solve(BitMatrix::from_rows(rows, cols), f);
  if (!x) return std::nullopt;
  N2Coordinates out;
  std::array<BitPoly*, 3> slot{&out.c_g, &out.c_f, &out.c_f2g};
  for (std::size_t idx : x->exponents()) slot[idx % 3]->set(idx / 3, true);
  return out;
}

BitPoly recompose_n2(const N2Coordinates& c) {
  const BitPoly g = g_of_r();
  const BitPoly f = f_of_r();
  const BitPoly g2 = substitute_square(g);
  BitPoly out = mul(compose(c.c_g, g2), g);
  out += mul(compose(c.c_f, g2), f);
  out += mul(compose(c.c_f2g, g2), mul(mul(f, f), g));
  return out;
}

}  // namespace hecke2

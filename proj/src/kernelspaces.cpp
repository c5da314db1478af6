#include "hecke2/kernelspaces.hpp"

#include <array>
#include <stdexcept>

#include "hecke2/gf2linalg.hpp"
#include "hecke2/recurrence.hpp"
#include "hecke2/semilinear.hpp"

namespace hecke2 {

BitPoly OddElement::to_r_poly() const {
  const BitPoly base = BitPoly::from_exponents({2, 1});  // r^2+r
  return mul(base, substitute_square(g));
}

long OddElement::r_degree() const {
  const long d = g.degree();
  return d == BitPoly::kNegInfinity ? BitPoly::kNegInfinity : 2 * d + 2;
}

std::optional<OddElement> OddElement::from_r_poly(const BitPoly& f) {
  // peel (r^2+r) t^k(r^2) = r^{2k+2} + r^{2k+1} from the top
  BitPoly rest = f;
  BitPoly g;
  while (!rest.is_zero()) {
    const long d = rest.degree();
    if (d < 2 || d % 2 != 0) return std::nullopt;
    const auto k = static_cast<std::size_t>((d - 2) / 2);
    g.set(k, true);
    rest.flip(static_cast<std::size_t>(d));
    rest.flip(static_cast<std::size_t>(d - 1));
  }
  return OddElement{std::move(g)};
}

BitPoly u_plus_i_on_gcoords(const BitPoly& g) {
  if (g.is_zero()) return {};
  CnStream stream;
  BitPoly out;
  const auto top = static_cast<std::size_t>(g.degree());
  for (std::size_t n = 0; n <= top; ++n) {
    BitPoly c = stream.next();
    if (g.get(n)) out += c;
  }
  return out;
}

namespace {

// Kernel vectors of the map t^j -> image(j) on {deg g <= top}, found as row
// dependencies in a streaming echelon. Each dependency at index j yields the
// kernel vector t^j + sum of earlier t^k.
template <typename ImageFn>
std::vector<BitPoly> map_kernel(std::size_t count, ImageFn&& image) {
  DegreeEchelon echelon;
  std::vector<BitPoly> kernel;
  for (std::size_t j = 0; j < count; ++j) {
    auto red = echelon.reduce(image(j));
    if (red.residual.is_zero()) {
      BitPoly v;
      v.set(j, true);
      for (std::size_t k : red.tags) v.flip(k);
      kernel.push_back(std::move(v));
    } else {
      echelon.insert(std::move(red.residual), j);
    }
  }
  return kernel;
}

}  // namespace

KmBasis km_basis(std::size_t m) {
  CnStream stream;
  std::vector<BitPoly> c;
  const std::size_t count = 4 * m + 4;
  c.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    c.push_back(stream.next());
    // deg C_j <= j keeps U+I inside L*
    if (c.back().degree() >= static_cast<long>(count))
      throw std::logic_error("km_basis: U+I escapes L*");
  }
  auto kernel =
      reduced_degree_basis(map_kernel(count, [&](std::size_t j) { return c[j]; }));
  if (kernel.size() != m + 1)
    throw std::logic_error("km_basis: dimension is not m+1");
  KmBasis basis;
  basis.m = m;
  basis.elements.reserve(kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    if (kernel[j].degree() != static_cast<long>(4 * j))
      throw std::logic_error("km_basis: unexpected g-degree");
    basis.elements.push_back(OddElement{std::move(kernel[j])});
  }
  return basis;
}

std::vector<OddElement> l_basis(std::size_t m) {
  const std::array<BitPoly, 3> gens{BitPoly::monomial(1),
                                    BitPoly::from_exponents({1, 0}),
                                    BitPoly::from_exponents({3, 2})};
  const BitPoly g2 = BitPoly::from_exponents({4, 3});  // G^2 in the t-variable
  std::vector<OddElement> out;
  out.reserve(3 * (m + 1));
  BitPoly power = BitPoly::one();
  for (std::size_t n = 0; n <= m; ++n) {
    for (const BitPoly& gen : gens) out.push_back(OddElement{mul(gen, power)});
    power = mul(power, g2);
  }
  return out;
}

bool kernel_equality_check(std::size_t m) {
  const std::size_t count = 4 * m + 4;
  const auto c = c_seq(count - 1);
  // (U+I)^2 in g-coordinates: t^j -> C_j -> XOR of C_k over supp(C_j)
  std::vector<BitPoly> c2(count);
  for (std::size_t j = 0; j < count; ++j)
    c2[j] = u_plus_i_on_gcoords(c[j]);

  auto star_kernel = reduced_degree_basis(
      map_kernel(count, [&](std::size_t j) { return c2[j]; }));

  const auto lb = l_basis(m);
  DegreeEchelon echelon;
  std::vector<BitPoly> l_kernel;
  for (std::size_t i = 0; i < lb.size(); ++i) {
    BitPoly image;
    for (std::size_t j : lb[i].g.exponents()) image += c2[j];
    auto red = echelon.reduce(std::move(image));
    if (red.residual.is_zero()) {
      BitPoly v = lb[i].g;
      for (std::size_t k : red.tags) v += lb[k].g;
      l_kernel.push_back(std::move(v));
    } else {
      echelon.insert(std::move(red.residual), i);
    }
  }
  auto l_kernel_basis = reduced_degree_basis(std::move(l_kernel));

  return star_kernel.size() == 2 * m + 2 && star_kernel == l_kernel_basis;
}

bool pr1_shape_check(std::size_t m) {
  const KmBasis basis = km_basis(m);
  const auto coords = decompose_n2(basis.elements.back().to_r_poly());
  if (!coords) return false;
  return pr1(*coords).degree() == static_cast<long>(m);
}

KernelReport kernel_report(std::size_t m) {
  KernelReport report;
  report.m = m;
  const KmBasis basis = km_basis(m);
  report.dim = basis.elements.size();
  for (const auto& e : basis.elements)
    report.gdegrees.push_back(static_cast<std::size_t>(e.g.degree()));
  report.lemma211 = kernel_equality_check(m);
  report.pr1 = pr1_shape_check(m);
  return report;
}

}  // namespace hecke2

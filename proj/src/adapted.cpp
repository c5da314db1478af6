#include "hecke2/adapted.hpp"

#include <algorithm>
#include <random>

#include "hecke2/gf2linalg.hpp"
#include "hecke2/semilinear.hpp"

namespace hecke2 {

namespace {

// evaluator headroom above the modeled degree, for K1 representatives whose
// degree can exceed 8m+2 by a few steps
constexpr std::size_t kDegreeSlack = 14;

}  // namespace

KFiniteModel::KFiniteModel(std::size_t m, std::size_t precision)
    : m_(m),
      basis_(km_basis(m)),
      evaluator_(precision, 8 * m + 2 + kDegreeSlack) {
  if (precision / 13 <= 8 * m + 2)
    throw std::invalid_argument(
        "KFiniteModel: floor(precision/13) must exceed 8m+2");
  series_basis_.reserve(dim());
  for (const auto& e : basis_.elements) {
    QSeries s = evaluator_.eval(e.to_r_poly());
    // annihilated by U_2 and by U_3 + I
    if (!u2(s).is_zero() || !agree(u3(s), s))
      throw std::logic_error("KFiniteModel: basis element not in the kernel");
    series_basis_.push_back(std::move(s));
  }
  x_rows_.reserve(dim());
  y_rows_.reserve(dim());
  for (const auto& e : basis_.elements) {
    x_rows_.push_back(coords_of(apply_tp(e, 7).g));
    y_rows_.push_back(coords_of(apply_tp(e, 13).g));
  }
}

BitPoly KFiniteModel::coords_of(const BitPoly& g) const {
  BitPoly coords;
  BitPoly rest = g;
  while (!rest.is_zero()) {
    const long d = rest.degree();
    if (d % 4 != 0 || d / 4 >= static_cast<long>(dim()))
      throw ImageEscapesModel("element outside the modeled K_m");
    const auto j = static_cast<std::size_t>(d / 4);
    rest += basis_.elements[j].g;
    coords.set(j, true);
  }
  return coords;
}

OddElement KFiniteModel::element_of(const BitPoly& coords) const {
  BitPoly g;
  for (std::size_t j : coords.exponents()) g += basis_.elements[j].g;
  return OddElement{std::move(g)};
}

OddElement KFiniteModel::apply_tp(const OddElement& f, std::size_t p) const {
  const QSeries image = tp(evaluator_.eval(f.to_r_poly()), p);
  const auto poly = evaluator_.reconstruct(image, k_degree_bound());
  if (!poly) throw ImageEscapesModel("T_p image does not reconstruct in K_m");
  auto odd = OddElement::from_r_poly(*poly);
  if (!odd || !u_plus_i_on_gcoords(odd->g).is_zero())
    throw std::logic_error("apply_tp: reconstructed image is not in K");
  return *odd;
}

BitPoly KFiniteModel::apply_tp_coords(const BitPoly& coords,
                                      std::size_t p) const {
  return coords_of(apply_tp(element_of(coords), p).g);
}

BitPoly KFiniteModel::apply_rows(const std::vector<BitPoly>& rows,
                                 const BitPoly& coords) {
  BitPoly out;
  for (std::size_t j : coords.exponents()) out += rows[j];
  return out;
}

const GridEntry* AdaptedGrid::find(std::size_t i, std::size_t j) const {
  for (const auto& e : entries)
    if (e.i == i && e.j == j) return &e;
  return nullptr;
}

AdaptedGrid adapted_grid(std::size_t grade, const KFiniteModel& model) {
  const std::size_t dim = model.dim();
  // stacked system (X v, Y v); row j = images of basis element j
  std::vector<BitPoly> stacked;
  stacked.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j)
    stacked.push_back(model.x_rows()[j] + shifted(model.y_rows()[j], dim));
  const BitMatrix system = BitMatrix::from_rows(stacked, 2 * dim);

  // joint kernel ker X ∩ ker Y as row dependencies of the stacked system;
  // solutions of the shift systems are canonicalized modulo it
  std::vector<BitPoly> joint_kernel;
  {
    DegreeEchelon echelon;
    std::vector<BitPoly> kernel;
    for (std::size_t j = 0; j < dim; ++j) {
      auto red = echelon.reduce(stacked[j]);
      if (red.residual.is_zero()) {
        BitPoly v;
        v.set(j, true);
        for (std::size_t k : red.tags) v.flip(k);
        kernel.push_back(std::move(v));
      } else {
        echelon.insert(std::move(red.residual), j);
      }
    }
    joint_kernel = reduced_degree_basis(std::move(kernel));
  }

  auto canonical = [&](BitPoly v) {
    for (const BitPoly& k : joint_kernel)
      if (v.get(static_cast<std::size_t>(k.degree()))) v += k;
    return v;
  };

  AdaptedGrid grid;
  grid.grade = grade;

  // m_{0,0} = F+G, the g = 1 basis element
  BitPoly e0;
  e0.set(0, true);
  if (!(model.basis().elements[0].g == BitPoly::one()))
    throw std::logic_error("adapted_grid: basis element 0 is not F+G");
  if (!KFiniteModel::apply_rows(model.x_rows(), e0).is_zero() ||
      !KFiniteModel::apply_rows(model.y_rows(), e0).is_zero())
    throw std::logic_error("adapted_grid: T_p(F+G) != 0");
  grid.entries.push_back(GridEntry{0, 0, model.element_of(e0), e0});

  for (std::size_t g = 1; g <= grade; ++g) {
    for (std::size_t i = 0; i <= g; ++i) {
      const std::size_t j = g - i;
      const BitPoly tx = i > 0 ? grid.find(i - 1, j)->coords : BitPoly{};
      const BitPoly ty = j > 0 ? grid.find(i, j - 1)->coords : BitPoly{};
      const BitPoly target = tx + shifted(ty, dim);
      auto v = solve(system, target);
      if (!v)
        throw InsufficientModel("adapted_grid: no solution for entry (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "); raise m");
      BitPoly coords = canonical(std::move(*v));
      if (KFiniteModel::apply_rows(model.x_rows(), coords) != tx ||
          KFiniteModel::apply_rows(model.y_rows(), coords) != ty)
        throw std::logic_error("adapted_grid: solve produced a non-solution");
      grid.entries.push_back(
          GridEntry{i, j, model.element_of(coords), std::move(coords)});
    }
  }
  return grid;
}

AdaptedBuild build_adapted(std::size_t grade) {
  std::size_t m = 4 * grade + 4;
  for (int attempt = 0;; ++attempt) {
    std::size_t precision = 4096;
    while (precision / 13 <= 8 * m + 2 + 16) precision *= 2;
    try {
      KFiniteModel model(m, precision);
      AdaptedGrid grid = adapted_grid(grade, model);
      return AdaptedBuild{std::move(model), std::move(grid)};
    } catch (const ImageEscapesModel&) {
      if (attempt >= 3) throw;
    } catch (const InsufficientModel&) {
      if (attempt >= 3) throw;
    }
    m *= 2;
  }
}

XYSeries tp_as_xy_series(std::size_t p, std::size_t grade,
                         const KFiniteModel& model, const AdaptedGrid& grid) {
  if (grid.grade < grade)
    throw std::invalid_argument("tp_as_xy_series: grid grade too small");
  XYSeries series;
  series.p = p;
  series.grade = grade;
  // u_{a,b} for a+b <= grade, determined entry by entry in grade order; the
  // only unknown at entry (i,j) is u_{i,j}, whose contribution is m_{0,0}
  std::vector<std::vector<int>> u(grade + 1,
                                  std::vector<int>(grade + 1, 0));
  const BitPoly m00 = grid.find(0, 0)->coords;
  for (const auto& entry : grid.entries) {
    if (entry.i + entry.j > grade) continue;
    BitPoly image = model.apply_tp_coords(entry.coords, p);
    for (std::size_t a = 0; a <= entry.i; ++a) {
      for (std::size_t b = 0; b <= entry.j; ++b) {
        if (a + b == 0 || (a == entry.i && b == entry.j)) continue;
        if (u[a][b])
          image += grid.find(entry.i - a, entry.j - b)->coords;
      }
    }
    if (entry.i == 0 && entry.j == 0) {
      if (!image.is_zero())
        throw NoConsistentSeries("tp_as_xy_series: T_p(m_{0,0}) != 0");
      continue;
    }
    if (image.is_zero()) {
      u[entry.i][entry.j] = 0;
    } else if (image == m00) {
      u[entry.i][entry.j] = 1;
    } else {
      throw NoConsistentSeries(
          "tp_as_xy_series: residual is not a multiple of m_{0,0}");
    }
  }
  for (std::size_t a = 0; a <= grade; ++a)
    for (std::size_t b = 0; a + b <= grade; ++b)
      if (u[a][b]) series.coeffs.emplace_back(a, b);
  return series;
}

bool pr1_equivariance_check(const KFiniteModel& model, const OddElement& f,
                            std::size_t p) {
  const auto coords_f = decompose_n2(f.to_r_poly());
  if (!coords_f) return false;

  // left side: pr1 of the exact T_p image
  const auto left = decompose_n2(model.apply_tp(f, p).to_r_poly());
  if (!left) return false;

  // right side: T_p acting on the K1 representative pr1(f) = c_f(G^2) F
  const BitPoly g2 = substitute_square(g_of_r());
  const BitPoly rep = mul(compose(pr1(*coords_f), g2), f_of_r());
  const std::size_t dmax = model.evaluator().max_degree();
  if (model.precision() / p <= dmax)
    throw std::invalid_argument("pr1_equivariance_check: precision too small");
  const QSeries image = tp(model.evaluator().eval(rep), p);
  const auto back = model.evaluator().reconstruct(image, dmax);
  if (!back) return false;
  const auto right = decompose_n2(*back);
  // image of a K1 element under T_p, p = 1 mod 6, stays in K1
  if (!right || !right->c_f2g.is_zero()) return false;

  return pr1(*left) == pr1(*right);
}

StabilizationReport stabilization_checks(const KFiniteModel& model,
                                         const std::vector<std::size_t>& primes,
                                         std::size_t samples,
                                         std::uint64_t seed) {
  StabilizationReport report;
  std::mt19937_64 rng(seed);
  const std::size_t degree_bound = (model.k_degree_bound() - 12) / 8;
  auto random_poly = [&] {
    BitPoly p;
    for (std::size_t k = 0; k <= degree_bound; ++k)
      if (rng() & 1) p.set(k, true);
    return p;
  };

  const BitPoly g = g_of_r();
  const BitPoly f = f_of_r();
  const BitPoly g2 = substitute_square(g);
  const BitPoly f2g = mul(mul(f, f), g);

  auto add_line = [&](std::size_t p, std::string check, bool pass) {
    report.all_pass = report.all_pass && pass;
    report.lines.push_back({p, std::move(check), pass});
  };

  for (std::size_t p : primes) {
    const bool one_mod6 = p % 6 == 1;
    bool k1_ok = true, k5_ok = true, n1_ok = true;
    for (std::size_t s = 0; s < samples; ++s) {
      const BitPoly a = compose(random_poly(), g2);
      const BitPoly b = compose(random_poly(), g2);
      const BitPoly k1_sample = mul(a, g) + mul(b, f);
      const BitPoly k5_sample = mul(a, g) + mul(b, f2g);

      const QSeries k1_image = tp(model.evaluator().eval(k1_sample), p);
      const QSeries k5_image = tp(model.evaluator().eval(k5_sample), p);
      // p = 1 mod 6 stabilizes K1 and K5; p = 5 mod 6 swaps them
      k1_ok = k1_ok && p3i(k1_image, one_mod6 ? 2 : 1).is_zero();
      k5_ok = k5_ok && p3i(k5_image, one_mod6 ? 1 : 2).is_zero();

      const QSeries n1_image = tp(model.evaluator().eval(mul(a, g)), p);
      const std::size_t dmax =
          std::min(model.evaluator().max_degree(), n1_image.precision() - 1);
      const auto back = model.evaluator().reconstruct(n1_image, dmax);
      if (!back) {
        n1_ok = false;
        continue;
      }
      const auto coords = decompose_n2(*back);
      n1_ok = n1_ok && coords && coords->c_f.is_zero() &&
              coords->c_f2g.is_zero();
    }
    add_line(p, one_mod6 ? "T_p stabilizes K1" : "T_p maps K1 into K5", k1_ok);
    add_line(p, one_mod6 ? "T_p stabilizes K5" : "T_p maps K5 into K1", k5_ok);
    add_line(p, "T_p stabilizes N1", n1_ok);
  }

  if (std::find(primes.begin(), primes.end(), std::size_t{5}) != primes.end()) {
    const QSeries d = series_const(NamedSeries::d, model.precision());
    const QSeries d5 = d * d * d * d * d;
    add_line(5, "T_5 takes D^5 to D", agree(tp(d5, 5), d));
  }
  return report;
}

}  // namespace hecke2

#include "hecke2/verification.hpp"

#include <atomic>
#include <random>
#include <sstream>

#include "hecke2/adapted.hpp"
#include "hecke2/gf2poly.hpp"
#include "hecke2/kernelspaces.hpp"
#include "hecke2/parallel.hpp"
#include "hecke2/qseries.hpp"
#include "hecke2/recurrence.hpp"
#include "hecke2/semilinear.hpp"

namespace hecke2 {

namespace {

BitPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  BitPoly p;
  for (std::size_t k = 0; k <= max_degree; ++k)
    if (rng() & 1) p.set(k, true);
  return p;
}

CheckResult muller_replay(const VerifyOptions& opt) {
  CheckResult res{"muller-replay", true, ""};
  C4mExpresser expresser;
  std::size_t expressed = 0;
  for (std::size_t m = 0; 4 * m < opt.muller_bound; ++m) {
    const auto report = expresser.express(m);
    if (!report.verified) {
      res.pass = false;
      res.detail = "recomposition failed at m=" + std::to_string(m);
      return res;
    }
    ++expressed;
  }
  res.detail = "all C_{4m}, 4m<" + std::to_string(opt.muller_bound) +
               ", expressed (" + std::to_string(expressed) + " values)";
  return res;
}

CheckResult degree_law(const VerifyOptions& opt) {
  const auto report = degree_law_check(opt.degree_law_bound);
  CheckResult res{"degree-law", report.pass, ""};
  if (report.pass) {
    res.detail = "degree C_n = n-1 iff n != 0 mod 4, n <= " +
                 std::to_string(opt.degree_law_bound);
  } else {
    res.detail = "violated at n=" + std::to_string(*report.first_violation);
  }
  return res;
}

CheckResult kernel_dimensions(const VerifyOptions& opt) {
  CheckResult res{"kernel-dimensions", true, ""};
  std::atomic<long> bad{-1};
  parallel_for(opt.kernel_max_m + 1, opt.jobs, [&](std::size_t m) {
    try {
      const auto basis = km_basis(m);
      for (std::size_t j = 0; j < basis.elements.size(); ++j)
        if (basis.elements[j].g.degree() != static_cast<long>(4 * j))
          bad = static_cast<long>(m);
      if (basis.elements.size() != m + 1) bad = static_cast<long>(m);
    } catch (const std::exception&) {
      bad = static_cast<long>(m);
    }
  });
  if (bad >= 0) {
    res.pass = false;
    res.detail = "failure at m=" + std::to_string(bad.load());
  } else {
    res.detail = "dim K_m = m+1, g-degrees {0,4,...,4m}, m <= " +
                 std::to_string(opt.kernel_max_m);
  }
  return res;
}

CheckResult lemma211(const VerifyOptions& opt) {
  CheckResult res{"lemma-2.11", true, ""};
  std::atomic<long> bad{-1};
  parallel_for(opt.lemma211_max_m + 1, opt.jobs, [&](std::size_t m) {
    if (!kernel_equality_check(m)) bad = static_cast<long>(m);
  });
  if (bad >= 0) {
    res.pass = false;
    res.detail = "kernels differ at m=" + std::to_string(bad.load());
  } else {
    res.detail = "(U+I)^2 kernels on L and L* equal, dim 2m+2, m <= " +
                 std::to_string(opt.lemma211_max_m);
  }
  return res;
}

CheckResult operator_laws(const VerifyOptions& opt) {
  CheckResult res{"operator-laws", true, ""};
  std::mt19937_64 rng(opt.seed);
  const BitPoly f_r = f_of_r();
  const BitPoly g_r = g_of_r();
  const UOperator u(2 * opt.operator_degree + 8);

  for (std::size_t trial = 0; trial < opt.operator_trials; ++trial) {
    const BitPoly f = random_poly(rng, opt.operator_degree);
    if (u.apply(mul(f, f)) != mul(u.apply(f), u.apply(f))) {
      res.pass = false;
      res.detail = "Frobenius law failed";
      return res;
    }
    if (u.apply(mul(g_r, f)) != mul(f_r, u.apply(f))) {
      res.pass = false;
      res.detail = "semi-linearity failed";
      return res;
    }
  }

  // T(F^n) lands on F^k with k <= n-2, k = n mod 2
  const UOperator ut(4 * opt.t_law_max_n);
  for (std::size_t n = 0; n <= opt.t_law_max_n; ++n) {
    const auto coeffs = express_in_f_powers(t_apply(BitPoly::monomial(n), ut));
    if (!coeffs) {
      res.pass = false;
      res.detail = "T(F^n) left Z/2[F] at n=" + std::to_string(n);
      return res;
    }
    for (std::size_t k : coeffs->exponents()) {
      if (k + 2 > n || (k % 2) != (n % 2)) {
        res.pass = false;
        res.detail = "T support law failed at n=" + std::to_string(n);
        return res;
      }
    }
  }

  // Lemma 2.8: (U^2+I)(F^i G^k) = F^i T(F^k) for i <= 2
  const UOperator u28(8 + 4 * opt.lemma28_max_k);
  BitPoly f_pow = BitPoly::one();
  for (std::size_t i = 0; i <= 2; ++i) {
    BitPoly g_pow = BitPoly::one();
    for (std::size_t k = 0; k <= opt.lemma28_max_k; ++k) {
      const BitPoly elem = mul(f_pow, g_pow);
      const BitPoly lhs = u28.apply(u28.apply(elem)) + elem;
      const BitPoly rhs = mul(f_pow, t_apply(BitPoly::monomial(k), u28));
      if (lhs != rhs) {
        res.pass = false;
        res.detail = "Lemma 2.8 failed at i=" + std::to_string(i) +
                     ", k=" + std::to_string(k);
        return res;
      }
      g_pow = mul(g_pow, g_r);
    }
    f_pow = mul(f_pow, f_r);
  }

  res.detail = std::to_string(opt.operator_trials) +
               " random trials (degree <= " +
               std::to_string(opt.operator_degree) + "), T law n <= " +
               std::to_string(opt.t_law_max_n) + ", Lemma 2.8 k <= " +
               std::to_string(opt.lemma28_max_k);
  return res;
}

CheckResult series_cross_representation(const VerifyOptions& opt) {
  CheckResult res{"series-cross-representation", true, ""};
  const std::size_t n = opt.series_precision;
  const QSeries f_direct = series_const(NamedSeries::f, n);
  const QSeries g_direct = series_const(NamedSeries::g, n);
  const QSeries d_direct = series_const(NamedSeries::d, n);
  const QSeries f_eval = series_of_r_poly(f_of_r(), n);
  const QSeries g_eval = series_of_r_poly(g_of_r(), n);
  if (!agree(f_direct, f_eval)) {
    res.pass = false;
    res.detail = "F: evaluation disagrees with odd-square enumeration";
  } else if (!agree(g_direct, g_eval)) {
    res.pass = false;
    res.detail = "G: evaluation disagrees with enumeration";
  } else if (!agree(d_direct, p3i(f_direct, 1)) ||
             !agree(d_direct, p3i(f_eval, 1))) {
    res.pass = false;
    res.detail = "D != p_{3,1}(F)";
  } else {
    res.detail = "F, G, D agree across representations to precision " +
                 std::to_string(n);
  }
  return res;
}

CheckResult u3_and_u2(const VerifyOptions& opt) {
  CheckResult res{"u3-equals-u", true, ""};
  if (!check_u3_equals_u(opt.u3_check_nmax, opt.u3_check_precision)) {
    res.pass = false;
    res.detail = "U_3 disagrees with U";
    return res;
  }
  std::mt19937_64 rng(opt.seed + 1);
  const REvaluator ev(opt.u3_check_precision, 2 * 100 + 2);
  for (std::size_t s = 0; s < opt.u2_odd_samples; ++s) {
    BitPoly g = random_poly(rng, 100);
    const QSeries series = ev.eval(OddElement{std::move(g)}.to_r_poly());
    if (!u2(series).is_zero()) {
      res.pass = false;
      res.detail = "U_2 does not annihilate an odd element";
      return res;
    }
  }
  res.detail = "U_3 = U for n <= " + std::to_string(opt.u3_check_nmax) +
               " at N=" + std::to_string(opt.u3_check_precision) + "; U_2 kills " +
               std::to_string(opt.u2_odd_samples) + " odd samples";
  return res;
}

CheckResult adapted_grid_check(const VerifyOptions& opt) {
  CheckResult res{"adapted-grid", true, ""};
  const auto build = build_adapted(opt.grid_grade);
  const auto& model = build.model;
  const auto& grid = build.grid;

  if (!(grid.find(0, 0)->element.g == BitPoly::one())) {
    res.pass = false;
    res.detail = "m_{0,0} is not F+G";
    return res;
  }
  // shift relations, re-derived through series + exact reconstruction
  for (const auto& entry : grid.entries) {
    const OddElement ximg = model.apply_tp(entry.element, 7);
    const OddElement yimg = model.apply_tp(entry.element, 13);
    const OddElement xexp =
        entry.i > 0 ? grid.find(entry.i - 1, entry.j)->element : OddElement{};
    const OddElement yexp =
        entry.j > 0 ? grid.find(entry.i, entry.j - 1)->element : OddElement{};
    if (!(ximg == xexp) || !(yimg == yexp)) {
      res.pass = false;
      res.detail = "shift relation failed at (" + std::to_string(entry.i) +
                   "," + std::to_string(entry.j) + ")";
      return res;
    }
  }
  // T_5, T_11 as truncated series in X, Y with zero constant term
  for (std::size_t p : {std::size_t{5}, std::size_t{11}}) {
    XYSeries series;
    try {
      series = tp_as_xy_series(p, opt.grid_grade, model, grid);
    } catch (const NoConsistentSeries& err) {
      res.pass = false;
      res.detail = "p=" + std::to_string(p) + ": " + err.what();
      return res;
    }
    // independent replay of the claimed identity on every entry
    for (const auto& entry : grid.entries) {
      BitPoly expected;
      for (const auto& [a, b] : series.coeffs) {
        if (a <= entry.i && b <= entry.j)
          expected += grid.find(entry.i - a, entry.j - b)->coords;
      }
      if (model.apply_tp_coords(entry.coords, p) != expected) {
        res.pass = false;
        res.detail = "p=" + std::to_string(p) + " series does not reproduce T_p";
        return res;
      }
    }
  }
  // pr1 equivariance for the generators
  for (std::size_t p : {std::size_t{7}, std::size_t{13}}) {
    for (const auto& entry : grid.entries) {
      if (!pr1_equivariance_check(model, entry.element, p)) {
        res.pass = false;
        res.detail = "pr1 equivariance failed for p=" + std::to_string(p);
        return res;
      }
    }
  }
  res.detail = "grade " + std::to_string(opt.grid_grade) +
               " grid exact; T_5, T_11 in (X,Y) to grade " +
               std::to_string(opt.grid_grade);
  return res;
}

CheckResult stabilization(const VerifyOptions& opt) {
  CheckResult res{"stabilization", true, ""};
  std::size_t m = 12;
  std::size_t precision = opt.stabilization_precision;
  while (precision / 13 <= 8 * m + 2) precision *= 2;
  const KFiniteModel model(m, precision);
  const auto report = stabilization_checks(model, {5, 7, 11, 13},
                                           opt.stabilization_samples, opt.seed);
  res.pass = report.all_pass;
  if (!report.all_pass) {
    for (const auto& line : report.lines)
      if (!line.pass)
        res.detail += "p=" + std::to_string(line.p) + " " + line.check + "; ";
  } else {
    res.detail = "Cor 4.9 patterns for p in {5,7,11,13}, " +
                 std::to_string(opt.stabilization_samples) +
                 " samples at N=" + std::to_string(precision);
  }
  return res;
}

CheckResult pr1_shape(const VerifyOptions& opt) {
  CheckResult res{"pr1-shape", true, ""};
  std::atomic<long> bad{-1};
  parallel_for(opt.pr1_max_m + 1, opt.jobs, [&](std::size_t m) {
    if (!pr1_shape_check(m)) bad = static_cast<long>(m);
  });
  if (bad >= 0) {
    res.pass = false;
    res.detail = "failed at m=" + std::to_string(bad.load());
  } else {
    res.detail = "pr1 of the degree-4m element is monic of degree m, m <= " +
                 std::to_string(opt.pr1_max_m);
  }
  return res;
}

}  // namespace

VerifyOptions quick_options() {
  VerifyOptions opt;
  opt.muller_bound = 2000;
  opt.degree_law_bound = 2000;
  opt.kernel_max_m = 48;
  opt.lemma211_max_m = 16;
  opt.pr1_max_m = 12;
  opt.operator_trials = 200;
  opt.operator_degree = 128;
  opt.t_law_max_n = 128;
  opt.lemma28_max_k = 48;
  opt.series_precision = 2000;
  opt.u3_check_nmax = 16;
  opt.u3_check_precision = 1024;
  opt.u2_odd_samples = 20;
  opt.grid_grade = 2;
  opt.stabilization_precision = 2048;
  opt.stabilization_samples = 8;
  return opt;
}

std::vector<CheckResult> run_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  results.push_back(muller_replay(opt));
  results.push_back(degree_law(opt));
  results.push_back(kernel_dimensions(opt));
  results.push_back(lemma211(opt));
  results.push_back(operator_laws(opt));
  results.push_back(series_cross_representation(opt));
  results.push_back(u3_and_u2(opt));
  results.push_back(adapted_grid_check(opt));
  results.push_back(stabilization(opt));
  results.push_back(pr1_shape(opt));
  return results;
}

}  // namespace hecke2

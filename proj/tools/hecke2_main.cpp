// Batch verification CLI: generates the C_n family, replays the kernel and
// adapted-basis constructions, and emits CSV/JSON reports.

#include <cstdlib>
#include <functional>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hecke2/adapted.hpp"
#include "hecke2/kernelspaces.hpp"
#include "hecke2/parallel.hpp"
#include "hecke2/qseries.hpp"
#include "hecke2/recurrence.hpp"
#include "hecke2/semilinear.hpp"
#include "hecke2/verification.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Relative output paths are resolved against HECKE2_OUTPUT_DIR when set.
std::string resolve_output(const std::string& path) {
  if (path.empty()) return path;
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  if (const char* dir = std::getenv("HECKE2_OUTPUT_DIR"))
    return (std::filesystem::path(dir) / p).string();
  return path;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string resolved = resolve_output(path);
  std::ofstream out(resolved);
  if (!out) throw std::runtime_error("cannot open output file " + resolved);
  out << content;
}

std::string degree_str(long deg) {
  return deg == hecke2::BitPoly::kNegInfinity ? "-inf" : std::to_string(deg);
}

json combination_json(const hecke2::CombinationReport& report) {
  return json{{"m", report.m},
              {"support", report.support},
              {"verified", report.verified}};
}

int run_cn_gen(std::size_t nmax, const std::string& format,
               const std::string& output) {
  std::ostringstream out;
  hecke2::CnStream stream;
  if (format == "csv") {
    out << "n,degree,bits_hex\n";
    for (std::size_t n = 0; n <= nmax; ++n) {
      const auto c = stream.next();
      out << n << ',' << degree_str(c.degree()) << ',' << c.to_hex() << '\n';
    }
  } else if (format == "json") {
    json rows = json::array();
    for (std::size_t n = 0; n <= nmax; ++n) {
      const auto c = stream.next();
      rows.push_back({{"n", n},
                      {"degree", c.degree()},
                      {"bits_hex", c.to_hex()}});
    }
    out << rows.dump(2) << '\n';
  } else {
    for (std::size_t n = 0; n <= nmax; ++n)
      out << "C_" << n << " = " << stream.next().to_string() << '\n';
  }
  emit(output, out.str());
  return kExitPass;
}

int run_cn_express(std::size_t bound, const std::string& format,
                   const std::string& output) {
  std::ostringstream out;
  hecke2::C4mExpresser expresser;
  bool all_ok = true;
  json rows = json::array();
  for (std::size_t m = 0; 4 * m < bound; ++m) {
    const auto report = expresser.express(m);
    all_ok = all_ok && report.verified;
    if (format == "json") {
      rows.push_back(combination_json(report));
    } else {
      out << "m=" << m << " support=";
      for (std::size_t i = 0; i < report.support.size(); ++i)
        out << (i ? "," : "") << report.support[i];
      out << (report.verified ? " verified" : " FAILED") << '\n';
    }
  }
  if (format == "json") {
    out << rows.dump(2) << '\n';
  } else {
    out << (all_ok ? "all C_{4m}, 4m<" + std::to_string(bound) + ", expressed"
                   : "FAILURE")
        << '\n';
  }
  emit(output, out.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

int run_cn_degree_law(std::size_t nmax, const std::string& output) {
  const auto report = hecke2::degree_law_check(nmax);
  std::ostringstream out;
  if (report.pass) {
    out << "degree law holds for n <= " << nmax << '\n';
  } else {
    out << "degree law violated at n = " << *report.first_violation << '\n';
  }
  emit(output, out.str());
  return report.pass ? kExitPass : kExitCheckFailed;
}

int run_kernel_verify(std::size_t max_m, unsigned jobs,
                      const std::string& format, const std::string& output) {
  std::vector<hecke2::KernelReport> reports(max_m + 1);
  std::vector<std::string> errors(max_m + 1);
  hecke2::parallel_for(max_m + 1, jobs, [&](std::size_t m) {
    try {
      reports[m] = hecke2::kernel_report(m);
    } catch (const std::exception& err) {
      errors[m] = err.what();
    }
  });
  bool all_ok = true;
  std::ostringstream out;
  json rows = json::array();
  for (std::size_t m = 0; m <= max_m; ++m) {
    if (!errors[m].empty()) {
      all_ok = false;
      out << "m=" << m << " ERROR " << errors[m] << '\n';
      continue;
    }
    const auto& r = reports[m];
    const bool ok = r.dim == m + 1 && r.lemma211 && r.pr1;
    all_ok = all_ok && ok;
    if (format == "json") {
      rows.push_back({{"m", r.m},
                      {"dim", r.dim},
                      {"gdegrees", r.gdegrees},
                      {"lemma211", r.lemma211},
                      {"pr1", r.pr1}});
    } else {
      out << "m=" << m << " dim=" << r.dim
          << " lemma211=" << (r.lemma211 ? "ok" : "FAIL")
          << " pr1=" << (r.pr1 ? "ok" : "FAIL") << '\n';
    }
  }
  if (format == "json") out << rows.dump(2) << '\n';
  emit(output, out.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

int run_kernel_basis(std::size_t m, const std::string& format,
                     const std::string& output) {
  const auto basis = hecke2::km_basis(m);
  std::ostringstream out;
  if (format == "json") {
    json elements = json::array();
    for (const auto& e : basis.elements)
      elements.push_back({{"g_hex", e.g.to_hex()},
                          {"g", e.g.to_string()},
                          {"g_degree", e.g.degree()}});
    out << json{{"m", m}, {"dim", basis.elements.size()},
                {"elements", elements}}
               .dump(2)
        << '\n';
  } else {
    for (const auto& e : basis.elements)
      out << "g = " << e.g.to_string() << '\n';
  }
  emit(output, out.str());
  return kExitPass;
}

int run_kernel_lemma211(std::size_t max_m, unsigned jobs,
                        const std::string& output) {
  std::vector<char> ok(max_m + 1, 0);
  hecke2::parallel_for(max_m + 1, jobs, [&](std::size_t m) {
    ok[m] = hecke2::kernel_equality_check(m) ? 1 : 0;
  });
  std::ostringstream out;
  bool all_ok = true;
  for (std::size_t m = 0; m <= max_m; ++m) {
    if (!ok[m]) {
      all_ok = false;
      out << "m=" << m << " FAIL\n";
    }
  }
  out << (all_ok ? "kernels of (U+I)^2 on L and L* agree for m <= " +
                       std::to_string(max_m)
                 : "FAILURE")
      << '\n';
  emit(output, out.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

int run_series_check_u3(std::size_t nmax, std::size_t precision,
                        const std::string& output) {
  const bool ok = hecke2::check_u3_equals_u(nmax, precision);
  emit(output, std::string("U_3 == U for n <= ") + std::to_string(nmax) +
                   " at N=" + std::to_string(precision) + ": " +
                   (ok ? "ok" : "FAIL") + "\n");
  return ok ? kExitPass : kExitCheckFailed;
}

json series_json(const hecke2::QSeries& s) {
  return json{{"precision", s.precision()}, {"bits_hex", s.bits_hex()}};
}

int run_series_check_f(std::size_t precision, const std::string& format,
                       const std::string& output) {
  using hecke2::NamedSeries;
  const auto f_direct = hecke2::series_const(NamedSeries::f, precision);
  const auto g_direct = hecke2::series_const(NamedSeries::g, precision);
  const auto d_direct = hecke2::series_const(NamedSeries::d, precision);
  const bool f_ok =
      agree(f_direct, hecke2::series_of_r_poly(hecke2::f_of_r(), precision));
  const bool g_ok =
      agree(g_direct, hecke2::series_of_r_poly(hecke2::g_of_r(), precision));
  const bool d_ok = agree(d_direct, hecke2::p3i(f_direct, 1));
  std::ostringstream out;
  if (format == "json") {
    out << json{{"precision", precision},
                {"F", series_json(f_direct)},
                {"G", series_json(g_direct)},
                {"D", series_json(d_direct)},
                {"f_ok", f_ok},
                {"g_ok", g_ok},
                {"d_ok", d_ok}}
               .dump(2)
        << '\n';
  } else {
    out << "F cross-representation: " << (f_ok ? "ok" : "FAIL") << '\n'
        << "G cross-representation: " << (g_ok ? "ok" : "FAIL") << '\n'
        << "D = p_{3,1}(F): " << (d_ok ? "ok" : "FAIL") << '\n';
  }
  emit(output, out.str());
  return f_ok && g_ok && d_ok ? kExitPass : kExitCheckFailed;
}

int run_adapted_build(std::size_t grade, const std::string& format,
                      const std::string& output) {
  const auto build = hecke2::build_adapted(grade);
  const auto& grid = build.grid;
  // relation transcript: re-derive each shift through series space
  bool all_ok = true;
  std::ostringstream transcript;
  for (const auto& e : grid.entries) {
    const auto ximg = build.model.apply_tp(e.element, 7);
    const auto yimg = build.model.apply_tp(e.element, 13);
    const hecke2::OddElement xexp =
        e.i > 0 ? grid.find(e.i - 1, e.j)->element : hecke2::OddElement{};
    const hecke2::OddElement yexp =
        e.j > 0 ? grid.find(e.i, e.j - 1)->element : hecke2::OddElement{};
    const bool ok = ximg == xexp && yimg == yexp;
    all_ok = all_ok && ok;
    transcript << "X m_{" << e.i << ',' << e.j << "} = "
               << (e.i > 0 ? "m_{" + std::to_string(e.i - 1) + "," +
                                 std::to_string(e.j) + "}"
                           : "0")
               << ", Y m_{" << e.i << ',' << e.j << "} = "
               << (e.j > 0 ? "m_{" + std::to_string(e.i) + "," +
                                 std::to_string(e.j - 1) + "}"
                           : "0")
               << (ok ? "  ok" : "  FAIL") << '\n';
  }
  std::ostringstream out;
  if (format == "json") {
    json entries = json::array();
    for (const auto& e : grid.entries)
      entries.push_back({{"i", e.i}, {"j", e.j}, {"g_hex", e.element.g.to_hex()}});
    out << json{{"d", grade},
                {"model_m", build.model.m()},
                {"entries", entries},
                {"relations_ok", all_ok}}
               .dump(2)
        << '\n';
  } else {
    out << "grid of grade " << grade << " inside K_" << build.model.m() << '\n';
    for (const auto& e : grid.entries)
      out << "m_{" << e.i << ',' << e.j << "} : g = " << e.element.g.to_string()
          << '\n';
    out << transcript.str();
  }
  emit(output, out.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

int run_adapted_tp_series(std::size_t p, std::size_t grade,
                          const std::string& format,
                          const std::string& output) {
  const auto build = hecke2::build_adapted(grade);
  const auto series = hecke2::tp_as_xy_series(p, grade, build.model, build.grid);
  std::ostringstream out;
  if (format == "json") {
    json coeffs = json::array();
    for (const auto& [a, b] : series.coeffs) coeffs.push_back({a, b});
    out << json{{"p", p}, {"d", grade}, {"coeffs", coeffs}}.dump(2) << '\n';
  } else {
    out << "T_" << p << " = ";
    if (series.coeffs.empty()) out << "0";
    for (std::size_t i = 0; i < series.coeffs.size(); ++i) {
      const auto& [a, b] = series.coeffs[i];
      if (i) out << " + ";
      if (a) out << "X" << (a > 1 ? "^" + std::to_string(a) : "");
      if (b) out << (a ? " " : "") << "Y" << (b > 1 ? "^" + std::to_string(b) : "");
    }
    out << "  (mod grade " << grade << ")\n";
  }
  emit(output, out.str());
  return kExitPass;
}

int run_adapted_stabilize(std::size_t precision, std::size_t samples,
                          std::uint64_t seed, const std::string& output) {
  std::size_t m = 12;
  std::size_t n = precision;
  while (n / 13 <= 8 * m + 2) n *= 2;
  const hecke2::KFiniteModel model(m, n);
  const auto report =
      hecke2::stabilization_checks(model, {5, 7, 11, 13}, samples, seed);
  std::ostringstream out;
  for (const auto& line : report.lines)
    out << "p=" << line.p << ' ' << line.check << ": "
        << (line.pass ? "ok" : "FAIL") << '\n';
  emit(output, out.str());
  return report.all_pass ? kExitPass : kExitCheckFailed;
}

int run_verify_all(const std::string& level, unsigned jobs,
                   const std::string& output) {
  hecke2::VerifyOptions opt =
      level == "quick" ? hecke2::quick_options() : hecke2::VerifyOptions{};
  opt.jobs = jobs;
  const auto results = hecke2::run_checks(opt);
  std::ostringstream out;
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.pass;
    out << (r.pass ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail
        << '\n';
  }
  out << (all_ok ? "all checks passed" : "CHECKS FAILED") << '\n';
  emit(output, out.str());
  return all_ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the characteristic-2 level-3 kernel "
               "constructions"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("-o,--output", output,
                 "output file (relative paths resolve against "
                 "HECKE2_OUTPUT_DIR); stdout when absent");
  app.add_option("-j,--jobs", jobs, "worker threads for batch commands")
      ->check(CLI::PositiveNumber);

  // cn
  auto* cn = app.add_subcommand("cn", "the C_n family");
  auto* cn_gen = cn->add_subcommand("gen", "emit C_0..C_max");
  std::size_t cn_max = 100;
  cn_gen->add_option("--max", cn_max, "largest index")->required();
  auto* cn_express = cn->add_subcommand(
      "express", "express every C_{4m}, 4m < max, in earlier C_k");
  std::size_t express_bound = 10000;
  cn_express->add_option("--max", express_bound, "bound on 4m")->required();
  auto* cn_degree = cn->add_subcommand("degree-law", "check the degree dichotomy");
  std::size_t degree_max = 10000;
  cn_degree->add_option("--max", degree_max, "largest n")->required();

  // kernel
  auto* kernel = app.add_subcommand("kernel", "the spaces K_m");
  auto* kernel_verify =
      kernel->add_subcommand("verify", "dimensions, degrees, per-m reports");
  std::size_t kernel_max_m = 64;
  kernel_verify->add_option("--max-m", kernel_max_m, "largest m")->required();
  auto* kernel_basis_cmd = kernel->add_subcommand("basis", "emit a K_m basis");
  std::size_t kernel_m = 4;
  kernel_basis_cmd->add_option("--m", kernel_m, "filtration index")->required();
  auto* kernel_lemma =
      kernel->add_subcommand("lemma211", "equality of (U+I)^2 kernels");
  std::size_t lemma_max_m = 64;
  kernel_lemma->add_option("--max-m", lemma_max_m, "largest m")->required();

  // series
  auto* series = app.add_subcommand("series", "q-expansion checks");
  auto* series_u3 = series->add_subcommand("check-u3", "U_3 against U");
  std::size_t u3_nmax = 64;
  std::size_t u3_precision = 4096;
  series_u3->add_option("--max-n", u3_nmax, "largest monomial degree")->required();
  series_u3->add_option("--precision,-N", u3_precision, "working precision");
  auto* series_f = series->add_subcommand(
      "check-f", "F, G, D across their two representations");
  std::size_t f_precision = 10000;
  series_f->add_option("--precision,-N", f_precision, "working precision");

  // adapted
  auto* adapted = app.add_subcommand("adapted", "the T_7/T_13-adapted basis");
  auto* adapted_build = adapted->add_subcommand("build", "build a grade-d grid");
  std::size_t grade = 4;
  adapted_build->add_option("--grade,-d", grade, "grid grade")->required();
  auto* adapted_tp =
      adapted->add_subcommand("tp-series", "T_p as a series in X, Y");
  std::size_t tp_p = 5;
  std::size_t tp_grade = 4;
  adapted_tp->add_option("--p", tp_p, "prime > 3")->required();
  adapted_tp->add_option("--grade,-d", tp_grade, "truncation grade");
  auto* adapted_stab = adapted->add_subcommand("stabilize", "Cor 4.9 patterns");
  std::size_t stab_precision = 4096;
  std::size_t stab_samples = 25;
  std::uint64_t stab_seed = 0x68ec2e01ULL;
  adapted_stab->add_option("--precision,-N", stab_precision, "working precision");
  adapted_stab->add_option("--samples", stab_samples, "samples per space");
  adapted_stab->add_option("--seed", stab_seed, "sampling seed");

  // verify
  auto* verify = app.add_subcommand("verify", "run check batteries");
  auto* verify_all = verify->add_subcommand("all", "the whole battery");
  std::string level = "quick";
  verify_all->add_option("--level", level, "bounds preset")
      ->check(CLI::IsMember({"quick", "full"}));

  // allow the global --format/-o/-j flags after the subcommand name
  const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* cmd) {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cn_gen->parsed()) return run_cn_gen(cn_max, format, output);
    if (cn_express->parsed())
      return run_cn_express(express_bound, format, output);
    if (cn_degree->parsed()) return run_cn_degree_law(degree_max, output);
    if (kernel_verify->parsed())
      return run_kernel_verify(kernel_max_m, jobs, format, output);
    if (kernel_basis_cmd->parsed())
      return run_kernel_basis(kernel_m, format, output);
    if (kernel_lemma->parsed())
      return run_kernel_lemma211(lemma_max_m, jobs, output);
    if (series_u3->parsed())
      return run_series_check_u3(u3_nmax, u3_precision, output);
    if (series_f->parsed())
      return run_series_check_f(f_precision, format, output);
    if (adapted_build->parsed()) return run_adapted_build(grade, format, output);
    if (adapted_tp->parsed())
      return run_adapted_tp_series(tp_p, tp_grade, format, output);
    if (adapted_stab->parsed())
      return run_adapted_stabilize(stab_precision, stab_samples, stab_seed,
                                   output);
    if (verify_all->parsed()) return run_verify_all(level, jobs, output);
    std::cerr << "missing subcommand\n";
    return kExitUsage;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitCheckFailed;
  }
}

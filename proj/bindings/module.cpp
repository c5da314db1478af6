#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hecke2/adapted.hpp"
#include "hecke2/kernelspaces.hpp"
#include "hecke2/qseries.hpp"
#include "hecke2/recurrence.hpp"
#include "hecke2/semilinear.hpp"
#include "hecke2/verification.hpp"

namespace py = pybind11;
using namespace hecke2;

namespace {

NamedSeries named_series(const std::string& which) {
  if (which == "r") return NamedSeries::r;
  if (which == "F" || which == "f") return NamedSeries::f;
  if (which == "G" || which == "g") return NamedSeries::g;
  if (which == "D" || which == "d") return NamedSeries::d;
  throw std::invalid_argument("unknown series name: " + which);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact GF(2) polynomial, kernel-space and Hecke-operator kernels";

  py::class_<BitPoly>(m, "BitPoly")
      .def(py::init<>())
      .def_static("parse", &BitPoly::parse)
      .def_static("from_hex", &BitPoly::from_hex)
      .def_static("monomial", &BitPoly::monomial)
      .def_static("from_exponents",
                  [](const std::vector<std::size_t>& exps) {
                    return BitPoly::from_exponents(exps);
                  })
      .def("degree", &BitPoly::degree)
      .def("is_zero", &BitPoly::is_zero)
      .def("exponents", &BitPoly::exponents)
      .def("to_hex", &BitPoly::to_hex)
      .def("substitute_square", [](const BitPoly& p) { return substitute_square(p); })
      .def("__add__", [](const BitPoly& a, const BitPoly& b) { return a + b; })
      .def("__mul__", [](const BitPoly& a, const BitPoly& b) { return mul(a, b); })
      .def("__eq__", [](const BitPoly& a, const BitPoly& b) { return a == b; })
      .def("__hash__",
           [](const BitPoly& p) { return py::hash(py::str(p.to_hex())); })
      .def("__str__", &BitPoly::to_string)
      .def("__repr__",
           [](const BitPoly& p) { return "BitPoly(" + p.to_string() + ")"; });

  m.def("f_of_r", &f_of_r);
  m.def("g_of_r", &g_of_r);
  m.def("u_apply", [](const BitPoly& f) { return u_apply(f); });
  m.def("t_apply", [](const BitPoly& p) { return t_apply(p); });
  m.def("alpha_apply", &alpha_apply);

  m.def("a_seq", &a_seq);
  m.def("c_seq", &c_seq);
  m.def("express_c4m", [](std::size_t mm) {
    const auto report = express_c4m(mm);
    py::dict out;
    out["m"] = report.m;
    out["support"] = report.support;
    out["verified"] = report.verified;
    return out;
  });
  m.def("degree_law_check", [](std::size_t nmax) {
    return degree_law_check(nmax).pass;
  });

  m.def("km_basis", [](std::size_t mm) {
    std::vector<BitPoly> out;
    for (const auto& e : km_basis(mm).elements) out.push_back(e.g);
    return out;
  });
  m.def("kernel_equality_check", &kernel_equality_check);
  m.def("pr1_shape_check", &pr1_shape_check);

  py::class_<QSeries>(m, "QSeries")
      .def(py::init<std::size_t>())
      .def("precision", &QSeries::precision)
      .def("is_zero", &QSeries::is_zero)
      .def("exponents", &QSeries::exponents)
      .def("bits_hex", &QSeries::bits_hex)
      .def("__add__", [](const QSeries& a, const QSeries& b) { return a + b; })
      .def("__mul__", [](const QSeries& a, const QSeries& b) { return a * b; })
      .def("__str__", &QSeries::to_string)
      .def("__repr__", [](const QSeries& s) {
        return "QSeries(" + s.to_string() + ", precision=" +
               std::to_string(s.precision()) + ")";
      });

  m.def("series_const", [](const std::string& which, std::size_t precision) {
    return series_const(named_series(which), precision);
  });
  m.def("u2", &u2);
  m.def("u3", &u3);
  m.def("tp", &tp);
  m.def("p3i", &p3i);
  m.def("agree", [](const QSeries& a, const QSeries& b) { return agree(a, b); });
  m.def("series_of_r_poly", &series_of_r_poly);
  m.def("r_poly_of_series", &r_poly_of_series);
  m.def("check_u3_equals_u", &check_u3_equals_u);

  m.def("adapted_grid", [](std::size_t grade) {
    const auto build = build_adapted(grade);
    py::list entries;
    for (const auto& e : build.grid.entries) {
      py::dict entry;
      entry["i"] = e.i;
      entry["j"] = e.j;
      entry["g"] = e.element.g;
      entries.append(entry);
    }
    py::dict out;
    out["d"] = grade;
    out["model_m"] = build.model.m();
    out["entries"] = entries;
    return out;
  });
  m.def("tp_xy_series", [](std::size_t p, std::size_t grade) {
    const auto build = build_adapted(grade);
    return tp_as_xy_series(p, grade, build.model, build.grid).coeffs;
  });

  m.def("verify_quick", []() {
    py::list out;
    for (const auto& r : run_checks(quick_options())) {
      py::dict line;
      line["name"] = r.name;
      line["pass"] = r.pass;
      line["detail"] = r.detail;
      out.append(line);
    }
    return out;
  });

  py::register_exception<PrecisionError>(m, "PrecisionError");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "combpoly/cli.hpp"
#include "combpoly/enumerate.hpp"
#include "combpoly/errors.hpp"
#include "combpoly/families.hpp"
#include "combpoly/grammar.hpp"
#include "combpoly/verify.hpp"

namespace py = pybind11;
using namespace combpoly;

namespace {

py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list coeffs(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_py(c));
  return out;
}

// Bivariate values become {(xexp, yexp): coeff}.
py::dict terms(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::make_tuple(e[0], e[1])] = to_py(c);
  return out;
}

py::object value(const FamilyValue& v) {
  if (const auto* p = std::get_if<UniPoly>(&v)) return coeffs(*p);
  return terms(std::get<LaurentPoly>(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorial polynomial engine";

  py::register_exception<Error>(m, "Error");

  m.def(
      "family",
      [](const std::string& fam, int n, const std::string& method) {
        FamilyId f = parse_family(fam);
        Method meth = method.empty() ? reference_method(f) : parse_method(f, method);
        return value(family(f, n, meth));
      },
      py::arg("family"), py::arg("n"), py::arg("method") = "",
      "Coefficient list (ascending) or {(xexp, yexp): coeff} for Andre.");

  m.def(
      "methods",
      [](const std::string& fam) {
        std::vector<std::string> out;
        for (const auto& meth : supported_methods(parse_family(fam))) out.push_back(meth.name());
        return out;
      },
      py::arg("family"));

  m.def(
      "triangle_entry",
      [](const std::string& fam, int n, int k) { return to_py(triangle_entry(parse_family(fam), n, k)); },
      py::arg("family"), py::arg("n"), py::arg("k"));

  m.def(
      "stanley_explicit_R", [](int n, int k) { return to_py(stanley_explicit_R(n, k)); },
      py::arg("n"), py::arg("k"));

  m.def(
      "matrix",
      [](const std::string& variant, int n, const std::string& target) {
        DetVariant v = parse_det_variant(variant);
        FamilyId t = target.empty() ? default_target(v) : parse_family(target);
        MatrixValue mv = build_matrix(v, n, t);
        std::vector<std::vector<std::string>> rows;
        std::visit(
            [&](const auto& h) {
              for (size_t i = 0; i < h.order(); ++i) {
                std::vector<std::string> row;
                for (size_t j = 0; j < h.order(); ++j) {
                  std::ostringstream os;
                  os << h.at(i, j);
                  row.push_back(os.str());
                }
                rows.push_back(std::move(row));
              }
            },
            mv);
        return py::make_tuple(rows, value(determinant(mv)));
      },
      py::arg("variant"), py::arg("n"), py::arg("target") = "",
      "(entries as strings, determinant).");

  m.def(
      "distribution",
      [](int n, const std::string& cls, const std::string& stat) {
        return coeffs(distribution(n, parse_object_class(cls), parse_stat(stat)));
      },
      py::arg("n"), py::arg("cls"), py::arg("stat"));

  m.def(
      "derive",
      [](const std::string& grammar_text, const std::string& start, unsigned n) {
        Grammar g = parse_grammar(grammar_text);
        return derive_n(g, g.var(start), n).to_string();
      },
      py::arg("grammar"), py::arg("letter"), py::arg("n"),
      "D^n applied to one letter, as text.");

  m.def(
      "verify",
      [](const std::string& suite, int max_n) {
        std::vector<CheckId> sel = expand_selection(suite);
        std::map<std::string, int> bounds;
        if (max_n >= 0) {
          for (const auto& id : sel) bounds[id.name()] = max_n;
        }
        py::list out;
        for (const auto& e : run_suite(sel, bounds).entries) {
          py::dict d;
          d["id"] = e.id.name();
          d["n_min"] = e.n_min;
          d["n_max"] = e.n_max;
          d["status"] = std::string(to_string(e.status));
          if (!e.observed.empty()) d["observed"] = e.observed;
          if (e.counterexample) {
            d["counterexample"] =
                py::make_tuple(e.counterexample->n, e.counterexample->lhs, e.counterexample->rhs);
          }
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_n") = -1);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "(exit code, stdout text, stderr text).");
}

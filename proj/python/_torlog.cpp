// Python bindings. Rationals cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input, floats are refused); matrices as
// lists of row lists.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "torlog/cli.hpp"
#include "torlog/fredholm.hpp"
#include "torlog/k1.hpp"
#include "torlog/linalg.hpp"
#include "torlog/torsion.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mpq_class> {
  PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

  bool load(handle src, bool convert) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    const object fraction = module_::import("fractions").attr("Fraction");
    const bool exact = PyLong_Check(src.ptr()) || isinstance(src, fraction);
    if (!exact && !(convert && isinstance<str>(src))) return false;
    try {
      if (isinstance<str>(src)) {
        value = torlog::parse_scalar(src.cast<std::string>());
        return true;
      }
      const object f = fraction(src);
      value = mpq_class(mpz_class(str(f.attr("numerator")).cast<std::string>()),
                        mpz_class(str(f.attr("denominator")).cast<std::string>()));
      value.canonicalize();
      return true;
    } catch (const torlog::ParseError&) {
      return false;
    }
  }

  static handle cast(const mpq_class& q, return_value_policy, handle) {
    const object to_int = module_::import("builtins").attr("int");
    const object fraction = module_::import("fractions").attr("Fraction");
    return fraction(to_int(q.get_num().get_str()), to_int(q.get_den().get_str())).release();
  }
};

template <>
struct type_caster<torlog::Matrix> {
  PYBIND11_TYPE_CASTER(torlog::Matrix, const_name("list[list[fractions.Fraction]]"));

  bool load(handle src, bool convert) {
    if (!isinstance<sequence>(src) || isinstance<str>(src)) return false;
    const auto rows = reinterpret_borrow<sequence>(src);
    std::vector<std::vector<mpq_class>> data;
    for (const auto row : rows) {
      make_caster<std::vector<mpq_class>> c;
      if (!c.load(row, convert)) return false;
      data.push_back(cast_op<std::vector<mpq_class>&&>(std::move(c)));
    }
    const std::size_t r = data.size(), n = r ? data[0].size() : 0;
    value = torlog::Matrix(r, n);
    for (std::size_t i = 0; i < r; ++i) {
      if (data[i].size() != n) throw torlog::ShapeError("ragged matrix");
      for (std::size_t j = 0; j < n; ++j) value(i, j) = data[i][j];
    }
    return true;
  }

  static handle cast(const torlog::Matrix& m, return_value_policy, handle) {
    list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      list row;
      for (std::size_t j = 0; j < m.cols(); ++j) row.append(reinterpret_steal<object>(make_caster<mpq_class>::cast(m(i, j), {}, {})));
      rows.append(row);
    }
    return rows.release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace torlog;

// [] stands for any matrix with a zero side; fix the shape from the dims.
CochainComplex make_complex(const std::vector<std::size_t>& dims, std::vector<Matrix> diffs) {
  for (std::size_t p = 0; p < diffs.size() && p + 1 < dims.size(); ++p) {
    if (diffs[p].rows() == 0 && diffs[p].cols() == 0 && (dims[p] == 0 || dims[p + 1] == 0)) {
      diffs[p] = Matrix(dims[p + 1], dims[p]);
    }
  }
  return CochainComplex(dims, std::move(diffs));
}

InnerProducts grams_or_standard(const CochainComplex& c, const std::optional<std::vector<Matrix>>& g) {
  if (!g) return InnerProducts::standard(c);
  std::vector<Matrix> grams = *g;
  for (std::size_t p = 0; p < grams.size() && p <= c.top_degree(); ++p) {
    if (grams[p].rows() == 0 && c.dim(p) == 0) grams[p] = Matrix(0, 0);
  }
  return InnerProducts(c, std::move(grams));
}

}  // namespace

PYBIND11_MODULE(_torlog, m) {
  m.doc() = "Exact torsion, Fredholm index and log-functor checks on finite models.";

  py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<LogValue>(m, "LogValue")
      .def(py::init<>())
      .def_static("log", &LogValue::log, py::arg("base"), py::arg("weight") = mpq_class(1))
      .def_property_readonly("terms",
                             [](const LogValue& v) {
                               std::vector<std::pair<mpq_class, mpq_class>> out;
                               for (const auto& t : v.terms()) out.emplace_back(t.weight, t.base);
                               return out;
                             })
      .def("is_zero", &LogValue::is_zero)
      .def("approx", &LogValue::approx)
      .def("exp_rational", &LogValue::exp_rational)
      .def("__float__", &LogValue::approx)
      .def("__add__", [](const LogValue& a, const LogValue& b) { return a + b; })
      .def("__sub__", [](const LogValue& a, const LogValue& b) { return a - b; })
      .def("__neg__", [](const LogValue& a) { return -a; })
      .def("__rmul__", [](const LogValue& a, const mpq_class& s) { return s * a; })
      .def("__mul__", [](const LogValue& a, const mpq_class& s) { return s * a; })
      .def("__eq__", [](const LogValue& a, const LogValue& b) { return a == b; })
      .def("__hash__", [](const LogValue& v) { return py::hash(py::str(v.to_string())); })
      .def("__str__", &LogValue::to_string)
      .def("__repr__", [](const LogValue& v) { return "LogValue(" + v.to_string() + ")"; });

  py::class_<CochainComplex>(m, "CochainComplex")
      .def(py::init(&make_complex), py::arg("dims"), py::arg("differentials"))
      .def_property_readonly("dims", &CochainComplex::dims)
      .def_property_readonly("top_degree", &CochainComplex::top_degree)
      .def_property_readonly("differentials", &CochainComplex::differentials)
      .def("__eq__", [](const CochainComplex& a, const CochainComplex& b) { return a == b; });

  m.def("betti_numbers", &betti_numbers, py::arg("complex"));
  m.def("is_acyclic", &is_acyclic, py::arg("complex"));
  m.def(
      "laplacian",
      [](const CochainComplex& c, std::size_t p, const std::optional<std::vector<Matrix>>& g) {
        return laplacian(c, grams_or_standard(c, g), p);
      },
      py::arg("complex"), py::arg("degree"), py::arg("grams") = py::none());
  m.def(
      "torsion_character",
      [](const CochainComplex& c, const std::vector<mpq_class>& beta, const std::optional<std::vector<Matrix>>& g) {
        return character(torsion_logarithm(c, grams_or_standard(c, g), beta));
      },
      py::arg("complex"), py::arg("beta"), py::arg("grams") = py::none());
  m.def(
      "reidemeister",
      [](const CochainComplex& c, const std::optional<std::vector<Matrix>>& g) {
        return reidemeister(c, grams_or_standard(c, g));
      },
      py::arg("complex"), py::arg("grams") = py::none());
  m.def(
      "weighted_euler",
      [](const CochainComplex& c) {
        const auto e = weighted_euler(c);
        return std::pair{e.chi, e.chi_p};
      },
      py::arg("complex"));
  m.def("residue_torsion", &residue_torsion, py::arg("complex"), py::arg("a"), py::arg("b"));
  m.def("beta_is_invariant", &beta_is_invariant, py::arg("beta"));
  m.def(
      "k1_torsion",
      [](const CochainComplex& c, const std::optional<std::vector<Matrix>>& g) {
        return torsion_of_acyclic(c, find_contraction(c, grams_or_standard(c, g))).value;
      },
      py::arg("complex"), py::arg("grams") = py::none());

  m.def("determinant", &determinant, py::arg("m"));
  m.def("rank", &rank, py::arg("m"));
  m.def("pseudo_det", py::overload_cast<const Matrix&>(&pseudo_det), py::arg("m"));
  m.def("is_sum_of_commutators", &is_sum_of_commutators, py::arg("m"));
  m.def("index_character", &index_character, py::arg("z"));
  m.def("parametrix", &parametrix, py::arg("z"));
  m.def(
      "log_fred",
      [](const Matrix& z, const std::optional<Matrix>& q) {
        const BlockLog l = log_fred(z, q.value_or(parametrix(z)));
        return std::pair{l.m, l.trace};
      },
      py::arg("z"), py::arg("q") = py::none());
  m.def(
      "check_additivity",
      [](const Matrix& z, const Matrix& z2) {
        const WitnessReport r = check_additivity(z, z2);
        return std::pair{r.trace, r.ok()};
      },
      py::arg("z"), py::arg("z2"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = cli::main(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "threshspec/errors.hpp"
#include "threshspec/reconstruct.hpp"
#include "threshspec/sequence.hpp"
#include "threshspec/spectral.hpp"

namespace py = pybind11;
using namespace threshspec;

namespace {

// Big integers cross the boundary as decimal strings.
py::int_ to_py(const Integer& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

Integer from_py(const py::handle& v) {
  if (!PyLong_Check(v.ptr())) throw py::type_error("coefficients must be Python ints");
  return Integer(py::str(v).cast<std::string>());
}

py::list coefficients(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

IntPolynomial to_polynomial(const py::iterable& coeffs) {
  std::vector<Integer> c;
  for (auto v : coeffs) c.push_back(from_py(v));
  return IntPolynomial(std::move(c));
}

BlockSequence as_sequence(const py::object& seq) {
  if (py::isinstance<BlockSequence>(seq)) return seq.cast<BlockSequence>();
  if (py::isinstance<py::str>(seq)) return parse_sequence(seq.cast<std::string>());
  return BlockSequence::from_blocks(seq.cast<std::vector<std::uint64_t>>());
}

py::dict spectrum_dict(const SpectrumReport& r) {
  py::dict d;
  d["m0"] = r.multiplicities.zero;
  d["m_minus_1"] = r.multiplicities.minus_one;
  d["divisor_polynomial"] = coefficients(r.divisor_polynomial);
  py::list eigen;
  for (const auto& e : r.eigenvalues) {
    py::dict item;
    item["value"] = e.decimal;
    item["multiplicity"] = e.multiplicity;
    item["exact"] = e.exact;
    eigen.append(item);
  }
  d["eigenvalues"] = eigen;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact spectral computations on threshold graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base);
  py::register_exception<NotDivisible>(m, "NotDivisible", base);
  py::register_exception<NotThreshold>(m, "NotThreshold", base);
  auto spectrum_error = py::register_exception<NotThresholdSpectrum>(m, "NotThresholdSpectrum", base);
  py::register_exception<NonIntegerOrNegativeGamma>(m, "NonIntegerOrNegativeGamma", spectrum_error);

  py::class_<BlockSequence>(m, "BlockSequence")
      .def(py::init([](const py::object& seq) { return as_sequence(seq); }), py::arg("sequence"))
      .def_property_readonly("blocks",
                             [](const BlockSequence& s) {
                               return std::vector<std::uint64_t>(s.blocks().begin(), s.blocks().end());
                             })
      .def_property_readonly("order", &BlockSequence::order)
      .def_property_readonly("connected", &BlockSequence::connected)
      .def("binary", [](const BlockSequence& s) { return render_binary(s); })
      .def("notation", [](const BlockSequence& s) { return render_block_notation(s); })
      .def("__eq__", [](const BlockSequence& a, const BlockSequence& b) { return a == b; })
      .def("__hash__", [](const BlockSequence& s) { return py::hash(py::str(render_binary(s))); })
      .def("__repr__", [](const BlockSequence& s) { return "BlockSequence('" + render_block_notation(s) + "')"; });

  m.def("char_poly", [](const py::object& seq) { return coefficients(char_poly(as_sequence(seq))); },
        py::arg("sequence"), "Ascending coefficients of det(A - xI).");
  m.def("brute_charpoly",
        [](const py::object& seq) { return coefficients(brute_charpoly(adjacency_matrix(as_sequence(seq)))); },
        py::arg("sequence"), "det(A - xI) by integer determinants and interpolation.");
  m.def("divisor_polynomial", [](const py::object& seq) { return coefficients(q_recursive(as_sequence(seq))); },
        py::arg("sequence"));
  m.def("gamma", [](const py::object& seq) {
    const auto table = gamma_table(as_sequence(seq));
    py::list out;
    for (const auto& v : table.values()) out.append(to_py(v));
    return out;
  }, py::arg("sequence"));
  m.def("multiplicities", [](const py::object& seq) {
    const auto mult = multiplicities(as_sequence(seq));
    return py::make_tuple(mult.zero, mult.minus_one);
  }, py::arg("sequence"), "(m0, m-1)");
  m.def("determinant", [](const py::object& seq) { return to_py(determinant(as_sequence(seq))); },
        py::arg("sequence"));
  m.def("spectrum", [](const py::object& seq, int precision) {
    return spectrum_dict(spectrum(as_sequence(seq), precision));
  }, py::arg("sequence"), py::arg("precision") = 12);
  m.def("reconstruct", [](const py::iterable& coeffs) { return reconstruct_sequence(to_polynomial(coeffs)); },
        py::arg("coefficients"));
  m.def("graph6_encode", [](const py::object& seq) { return graph6_encode(adjacency_matrix(as_sequence(seq))); },
        py::arg("sequence"));
  m.def("recognize", [](const std::string& g6) { return recognize_threshold(graph6_decode(g6)); }, py::arg("graph6"));
  m.def("verify_distinct", [](std::size_t order, std::size_t workers) {
    CensusReport r;
    {
      py::gil_scoped_release release;
      r = verify_distinct(order, workers);
    }
    py::dict d;
    d["order"] = r.order;
    d["count"] = r.count;
    d["distinct"] = r.distinct;
    py::list collisions;
    for (const auto& c : r.collisions) {
      py::dict item;
      item["polynomial"] = coefficients(c.polynomial);
      item["sequences"] = c.sequences;
      collisions.append(item);
    }
    d["collisions"] = collisions;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
  }, py::arg("order"), py::arg("workers") = 1);
}

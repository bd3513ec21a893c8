#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egqldpc/code_analysis.hpp"
#include "egqldpc/code_builder.hpp"
#include "egqldpc/error.hpp"
#include "egqldpc/field.hpp"
#include "egqldpc/geometry.hpp"
#include "egqldpc/gf2.hpp"
#include "egqldpc/io.hpp"

namespace py = pybind11;
using namespace egqldpc;

namespace {

using Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

BinMatrix to_matrix(const Array& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
  const auto view = a.unchecked<2>();
  BinMatrix m(static_cast<std::size_t>(view.shape(0)), static_cast<std::size_t>(view.shape(1)));
  for (py::ssize_t r = 0; r < view.shape(0); ++r) {
    for (py::ssize_t c = 0; c < view.shape(1); ++c) {
      if (view(r, c) > 1) throw py::value_error("entries must be 0 or 1");
      m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), view(r, c) == 1);
    }
  }
  return m;
}

Array to_array(const BinMatrix& m) {
  Array out({static_cast<py::ssize_t>(m.rows()), static_cast<py::ssize_t>(m.cols())});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) view(r, c) = m.get(r, c) ? 1 : 0;
  }
  return out;
}

py::dict distance_dict(const DistanceResult& d) {
  py::dict out;
  out["kind"] = std::string(to_string(d.kind));
  if (d.kind == DistanceKind::Inconclusive || d.value == kNoCodeword) {
    out["value"] = py::none();
  } else {
    out["value"] = d.value;
  }
  out["work"] = d.work;
  out["witness"] = d.witness ? py::cast(d.witness->support()) : py::none();
  return out;
}

py::dict line_dict(const Line& l) {
  py::dict out;
  out["class_id"] = l.class_id;
  out["direction"] = l.direction;
  out["base"] = l.base;
  out["points"] = l.points;
  return out;
}

Geometry geometry(std::uint32_t m, std::uint32_t q) { return Geometry(m, make_field_of_order(q)); }

CodeSpec spec(const std::string& family, std::uint32_t m, std::uint32_t q, std::optional<std::uint32_t> cls) {
  return {parse_family(family), m, q, cls};
}

}  // namespace

PYBIND11_MODULE(_egqldpc, m) {
  m.doc() = "Quantum LDPC codes from Euclidean geometries EG(m,q)";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const auto type = py::reinterpret_borrow<py::object>(error_type.ptr());
      py::object exc = type(e.what());
      exc.attr("name") = std::string(e.name());
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t s) { return make_field(p, s); }), py::arg("p"), py::arg("s"))
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("s", &Field::s)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus",
                             [](const Field& f) { return std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end()); })
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add({a}, {b}).code; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul({a}, {b}).code; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv({a}).code; });

  m.def("geometry_stats", [](std::uint32_t mm, std::uint32_t q) {
    const auto s = geometry(mm, q).stats();
    py::dict out;
    out["points"] = s.n_points;
    out["lines"] = s.n_lines;
    out["classes"] = s.n_classes;
    out["lines_per_point"] = s.lines_per_point;
    out["points_per_line"] = s.points_per_line;
    out["parallels_per_line"] = s.parallels_per_line;
    return out;
  }, py::arg("m"), py::arg("q"));

  m.def("lines", [](std::uint32_t mm, std::uint32_t q) {
    py::list out;
    geometry(mm, q).for_each_line([&](const Line& l) { out.append(line_dict(l)); });
    return out;
  }, py::arg("m"), py::arg("q"));

  m.def("point_coords", [](std::uint32_t mm, std::uint32_t q, std::uint32_t index) {
    const auto g = geometry(mm, q);
    std::vector<std::uint32_t> out;
    for (const auto c : g.coords(index)) out.push_back(c.code);
    return out;
  }, py::arg("m"), py::arg("q"), py::arg("index"));

  py::class_<CssCode>(m, "CssCode")
      .def_property_readonly("family", [](const CssCode& c) { return std::string(to_string(c.spec.family)); })
      .def_property_readonly("m", [](const CssCode& c) { return c.spec.m; })
      .def_property_readonly("q", [](const CssCode& c) { return c.spec.q; })
      .def_property_readonly("class_index", [](const CssCode& c) { return c.spec.class_index; })
      .def_property_readonly("case_label", [](const CssCode& c) { return c.recipe.case_label; })
      .def_property_readonly("recipe", [](const CssCode& c) { return c.recipe.to_string(); })
      .def_property_readonly("n", &CssCode::n)
      .def_property_readonly("gen_rows", &CssCode::gen_rows)
      .def_property_readonly("core", [](const CssCode& c) { return to_array(c.core); })
      .def_property_readonly("h_orth", [](const CssCode& c) { return to_array(c.h_orth); })
      .def("stabilizer", [](const CssCode& c) { return to_array(assemble_stabilizer(c)); });

  m.def("build_code", [](const std::string& family, std::uint32_t mm, std::uint32_t q,
                         std::optional<std::uint32_t> cls) { return build_code(spec(family, mm, q, cls)); },
        py::arg("family"), py::arg("m"), py::arg("q"), py::arg("class_index") = py::none());

  m.def("paper_params", [](const std::string& family, std::uint32_t mm, std::uint32_t q) {
    const auto p = paper_params(parse_family(family), mm, q);
    py::dict out;
    out["n"] = p.n;
    out["k"] = p.k;
    out["d"] = p.d_bound;
    out["d_kind"] = p.d_kind == DistanceClaim::Exact ? "exact" : "lower";
    return out;
  }, py::arg("family"), py::arg("m"), py::arg("q"));

  m.def("b_coefficient", &b_coefficient, py::arg("t"), py::arg("q"));

  m.def("rank", [](const Array& a) { return rank(to_matrix(a)); }, py::arg("h"));
  m.def("nullspace_basis", [](const Array& a) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& v : nullspace_basis(to_matrix(a))) out.push_back(v.support());
    return out;
  }, py::arg("h"), "Basis vectors of the kernel, each as its support.");
  m.def("self_orth_check", [](const Array& a) {
    const auto r = self_orth_check(to_matrix(a));
    py::dict out;
    out["ok"] = r.ok;
    out["violating_pairs"] = r.violating_pairs;
    out["odd_weight_rows"] = r.odd_weight_rows;
    return out;
  }, py::arg("h"));
  m.def("exact_distance", [](const Array& a, std::size_t cap) { return distance_dict(exact_distance(to_matrix(a), cap)); },
        py::arg("h"), py::arg("dim_cap") = kDefaultDimCap);
  m.def("verify_distance_floor", [](const Array& a, std::size_t w, std::uint64_t budget) {
    return distance_dict(verify_distance_floor(to_matrix(a), w, budget));
  }, py::arg("h"), py::arg("w"), py::arg("budget") = kDefaultWeightBudget);

  m.def("claim_check", [](const std::string& family, std::uint32_t mm, std::uint32_t q,
                          std::optional<std::uint32_t> cls, std::size_t dim_cap, std::uint64_t budget) {
    AnalysisOptions options;
    options.dim_cap = dim_cap;
    options.weight_budget = budget;
    const auto r = claim_check(spec(family, mm, q, cls), options);
    py::dict verdicts;
    for (const auto& [name, v] : r.verdicts) verdicts[py::str(name)] = std::string(to_string(v.verdict));
    py::dict out;
    out["n"] = r.n;
    out["rank"] = r.rank;
    out["k_computed"] = r.k_computed;
    out["k_paper"] = r.paper.k;
    out["self_orthogonal"] = r.self_orth.ok;
    out["violating_pairs"] = r.self_orth.violating_pairs;
    out["distance"] = distance_dict(r.distance);
    out["verdicts"] = verdicts;
    out["report"] = write_report(r);
    return out;
  }, py::arg("family"), py::arg("m"), py::arg("q"), py::arg("class_index") = py::none(),
        py::arg("dim_cap") = kDefaultDimCap, py::arg("budget") = kDefaultWeightBudget);

  m.def("write_alist", [](const Array& a) { return write_alist(to_matrix(a)); }, py::arg("h"));
  m.def("parse_alist", [](const std::string& text) { return to_array(parse_alist(text)); }, py::arg("text"));
}

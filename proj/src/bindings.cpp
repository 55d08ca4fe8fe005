#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "medsg/arf.hpp"
#include "medsg/closure.hpp"
#include "medsg/commands.hpp"
#include "medsg/errors.hpp"
#include "medsg/rational.hpp"
#include "medsg/semigroup.hpp"

namespace py = pybind11;

namespace {

py::object json_obj(const medsg::Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

medsg::NumericalSemigroup make(const std::vector<std::int64_t>& gens) {
    return medsg::NumericalSemigroup::from_generators(gens);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact computations on numerical semigroups";
    py::register_exception<medsg::Error>(m, "SemigroupError");

    m.def("minimal_generators",
          [](const std::vector<std::int64_t>& g) { return make(g).minimal_generators(); },
          py::arg("generators"));
    m.def("info",
          [](const std::vector<std::int64_t>& g) { return json_obj(medsg::cmd_info(g)["payload"]); },
          py::arg("generators"));
    m.def("apery",
          [](const std::vector<std::int64_t>& g, std::int64_t element, bool hat) {
              return json_obj(medsg::cmd_apery(g, element, hat)["payload"]);
          },
          py::arg("generators"), py::arg("element"), py::arg("hat") = false);
    m.def("med_closure",
          [](const std::vector<std::int64_t>& g, const std::string& method, bool trace) {
              return json_obj(medsg::cmd_med_closure(g, method, trace)["payload"]);
          },
          py::arg("generators"), py::arg("method") = "all", py::arg("trace") = false);
    m.def("is_med", [](const std::vector<std::int64_t>& g) { return medsg::is_med(make(g)); },
          py::arg("generators"));
    m.def("is_arf",
          [](const std::vector<std::int64_t>& g) { return medsg::is_arf_semigroup(make(g)); },
          py::arg("generators"));
    m.def("is_arf_element",
          [](const std::vector<std::int64_t>& g, std::int64_t z) {
              return medsg::is_arf_element(make(g), z);
          },
          py::arg("generators"), py::arg("z"));
    m.def("is_symmetric",
          [](const std::vector<std::int64_t>& g) { return medsg::is_symmetric(make(g)); },
          py::arg("generators"));
    m.def("extend",
          [](const std::vector<std::int64_t>& g, std::int64_t r) {
              return json_obj(medsg::cmd_extend(g, r)["payload"]);
          },
          py::arg("generators"), py::arg("r"));
    m.def("d_bound",
          [](const std::vector<std::int64_t>& g) {
              medsg::Rational d = medsg::d_bound(make(g));
              return std::make_pair(d.num, d.den);
          },
          py::arg("generators"));
    m.def("fuzz",
          [](std::uint64_t seed, std::int64_t samples, std::int64_t m_max, std::int64_t gen_max) {
              return json_obj(medsg::cmd_fuzz(seed, samples, m_max, gen_max).doc["payload"]);
          },
          py::arg("seed") = 0, py::arg("samples") = 100, py::arg("m_max") = 8,
          py::arg("gen_max") = 60);
}

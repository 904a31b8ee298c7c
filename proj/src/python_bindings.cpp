// Thin JSON-in, JSON-out layer; the Python package converts to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixcay/error.hpp"
#include "mixcay/harness.hpp"
#include "mixcay/report.hpp"

namespace py = pybind11;
using namespace mixcay;

namespace {

MixedCayleyParams load(const std::string& params_json) {
  try {
    return params_from_json(Json::parse(params_json));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_mixcay, m) {
  m.doc() = "Arc connectivity of mixed Cayley digraphs";

  static py::exception<Error> error(m, "MixcayError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "analyze",
      [](const std::string& params, std::size_t atom_cap) {
        const auto p = load(params);
        return analysis_document(p, analyze_instance(p, atom_cap)).dump();
      },
      py::arg("params"), py::arg("atom_cap") = kDefaultAtomCap);

  m.def(
      "classify",
      [](const std::string& params, bool literal) {
        return classify_document(load(params), literal ? SubgroupReading::literal
                                                       : SubgroupReading::admit_trivial)
            .dump();
      },
      py::arg("params"), py::arg("literal") = false);

  m.def(
      "export_json",
      [](const std::string& params) {
        const auto p = load(params);
        return graph_document(p, build_mixed(p)).dump();
      },
      py::arg("params"));

  m.def(
      "export_dot",
      [](const std::string& params) { return to_dot(build_mixed(load(params)), "MD"); },
      py::arg("params"));

  m.def(
      "crosscheck",
      [](const std::string& space) {
        InstanceSpaceSpec spec;
        try {
          spec = space_from_json(Json::parse(space));
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorKind::parse, e.what());
        }
        CrosscheckResult r;
        {
          py::gil_scoped_release release;
          r = run_crosscheck(spec);
        }
        return crosscheck_document(spec, r).dump();
      },
      py::arg("space"));
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "summa/cesaro.hpp"
#include "summa/classes.hpp"
#include "summa/errors.hpp"
#include "summa/experiment.hpp"
#include "summa/hypothesis.hpp"
#include "summa/oracle.hpp"
#include "summa/serialize.hpp"

namespace py = pybind11;
using namespace summa;

namespace {

std::vector<double> to_vector(const RealSequence& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

// Structured results cross the boundary as JSON text; the Python package
// decodes them so both sides share one serialization.
PYBIND11_MODULE(_summa, m) {
  m.doc() = "Absolute Cesàro summability lab";
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  m.def("cesaro_coefficients", &cesaro_coefficients, py::arg("alpha"), py::arg("n"));
  m.def("cesaro_kernel", &cesaro_kernel, py::arg("order"), py::arg("n"));

  m.def(
      "cesaro_sigma",
      [](std::vector<double> a, double alpha) { return to_vector(cesaro_sigma(RealSequence(0, std::move(a)), alpha)); },
      py::arg("a"), py::arg("alpha"));
  m.def(
      "cesaro_t",
      [](std::vector<double> a, double alpha, Index start) {
        return to_vector(cesaro_t(RealSequence(start, std::move(a)), alpha));
      },
      py::arg("a"), py::arg("alpha"), py::arg("start") = 0);
  m.def(
      "w_sequence",
      [](std::vector<double> t, double alpha) { return to_vector(w_sequence(RealSequence(1, std::move(t)), alpha)); },
      py::arg("t"), py::arg("alpha"));

  m.def(
      "materialize",
      [](const std::string& family, Index n, Index start, std::map<std::string, double> params) {
        return to_vector(materialize({family, std::move(params), n, start}));
      },
      py::arg("family"), py::arg("n"), py::arg("start") = 0, py::arg("params") = std::map<std::string, double>{});

  m.def("_family_catalog", [] {
    Json out = Json::array();
    for (const auto& f : family_catalog()) {
      out.push_back({{"name", f.name}, {"formula", f.formula}, {"params", f.params}});
    }
    return out.dump();
  });

  m.def(
      "_growth_diagnostic",
      [](std::vector<Index> checkpoints, std::vector<double> values, double slope, double ratio) {
        GrowthTolerances tol;
        tol.slope = slope;
        tol.ratio = ratio;
        return Json(growth_diagnostic(checkpoints, values, std::nullopt, tol)).dump();
      },
      py::arg("checkpoints"), py::arg("values"), py::arg("slope") = 0.1, py::arg("ratio") = 1.5);

  m.def(
      "_almost_increasing",
      [](std::vector<double> b, Index start, double floor) {
        return Json(almost_increasing_diagnostic(RealSequence(start, std::move(b)), floor)).dump();
      },
      py::arg("b"), py::arg("start") = 1, py::arg("floor") = 1e-6);

  m.def(
      "_run_oracle",
      [](std::uint64_t seed, std::uint64_t trials) {
        OracleSuiteConfig config;
        config.seed = seed;
        if (trials > 0) {
          config.abel_trials = config.lemma_trials = config.decomposition_trials = config.power_trials = trials;
        }
        return Json(run_oracle_suites(config)).dump();
      },
      py::arg("seed") = 42, py::arg("trials") = 0);

  m.def(
      "_run_config",
      [](const std::string& text, bool write) {
        const auto config = parse_config(Json::parse(text));
        RunReport report;
        {
          py::gil_scoped_release release;
          report = run(config);
        }
        if (write) write_outputs(config, report);
        return py::make_tuple(render_report(report), report.exit_status, report.files);
      },
      py::arg("config_json"), py::arg("write") = false);
}

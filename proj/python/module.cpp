#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dwell/cli.hpp"
#include "dwell/density.hpp"
#include "dwell/dynamics.hpp"
#include "dwell/error.hpp"
#include "dwell/oracle.hpp"
#include "dwell/spectrum.hpp"
#include "dwell/thermal.hpp"

namespace py = pybind11;
using namespace dwell;

namespace {

PhysicalConstants pick(const std::string& name) {
  return name.empty() ? constants() : PhysicalConstants::from_name(name);
}

WellSpec well_of(double a, double b, double k, std::optional<double> m, const PhysicalConstants& pc) {
  return {a, b, k, m.value_or(pc.m_e)};
}

}  // namespace

PYBIND11_MODULE(_dwell, mod) {
  mod.doc() = "Double square well solver";
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&] { return py::exception<Error>(mod, "DwellError", PyExc_RuntimeError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (e.kind() + ": " + e.what()).c_str());
    }
  });

  py::class_<PhysicalConstants>(mod, "PhysicalConstants")
      .def_static("paper", &PhysicalConstants::paper)
      .def_static("codata", &PhysicalConstants::codata)
      .def_readonly("hbar", &PhysicalConstants::hbar)
      .def_readonly("m_e", &PhysicalConstants::m_e)
      .def_readonly("c", &PhysicalConstants::c)
      .def_readonly("b_wien", &PhysicalConstants::b_wien);

  py::enum_<Parity>(mod, "Parity").value("even", Parity::even).value("odd", Parity::odd);

  py::class_<EnergyLevel>(mod, "EnergyLevel")
      .def_readonly("index", &EnergyLevel::index)
      .def_readonly("parity", &EnergyLevel::parity)
      .def_readonly("eps", &EnergyLevel::eps)
      .def_readonly("energy", &EnergyLevel::energy)
      .def("__repr__", [](const EnergyLevel& l) {
        return "EnergyLevel(" + std::to_string(l.index) + ", " + cli::format_number(l.energy) + " J)";
      });

  py::class_<GroundGap>(mod, "GroundGap")
      .def_readonly("delta_e", &GroundGap::delta_e)
      .def_readonly("tau", &GroundGap::tau)
      .def_readonly("tau_lower_bound", &GroundGap::tau_lower_bound);

  py::class_<SweepRow>(mod, "SweepRow")
      .def_readonly("b", &SweepRow::b)
      .def_readonly("E0", &SweepRow::E0)
      .def_readonly("E1", &SweepRow::E1)
      .def_readonly("delta_e", &SweepRow::delta_e)
      .def_readonly("tau", &SweepRow::tau)
      .def_readonly("error_kind", &SweepRow::error_kind)
      .def_property_readonly("ok", &SweepRow::ok);

  py::class_<LogLinearFit>(mod, "LogLinearFit")
      .def_readonly("slope", &LogLinearFit::slope)
      .def_readonly("intercept", &LogLinearFit::intercept)
      .def_readonly("r_squared", &LogLinearFit::r_squared);

  py::class_<GapSearchResult>(mod, "GapSearchResult")
      .def_readonly("b", &GapSearchResult::b)
      .def_readonly("delta_e", &GapSearchResult::delta_e)
      .def_readonly("steps", &GapSearchResult::steps)
      .def_readonly("certified", &GapSearchResult::certified);

  py::class_<TwoLevelSystem>(mod, "TwoLevelSystem")
      .def_readonly("E0", &TwoLevelSystem::E0)
      .def_readonly("E1", &TwoLevelSystem::E1)
      .def_readonly("d", &TwoLevelSystem::d)
      .def_property_readonly("omega", &TwoLevelSystem::omega)
      .def_property_readonly("period", &TwoLevelSystem::period);

  mod.def(
      "barrier_bound",
      [](double a, std::optional<double> m, const std::string& constants) {
        const auto pc = pick(constants);
        return barrier_bound({a, 1.0, 1.0, m.value_or(pc.m_e)}, pc);
      },
      py::arg("a"), py::arg("m") = py::none(), py::arg("constants") = "");

  mod.def(
      "spectrum",
      [](double a, double b, double k, std::optional<double> m, const std::string& constants) {
        const auto pc = pick(constants);
        return solve_below_barrier(well_of(a, b, k, m, pc), pc).levels;
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("m") = py::none(),
      py::arg("constants") = "");

  mod.def(
      "scaled_spectrum",
      [](double kappa, double lambda) {
        return solve_below_barrier(ScaledWell{kappa, lambda, 1.0, 1.0}).levels;
      },
      py::arg("kappa"), py::arg("lambda_"));

  mod.def(
      "bound_violations",
      [](double kappa, double lambda) {
        return verify_bounds(solve_below_barrier(ScaledWell{kappa, lambda, 1.0, 1.0})).violations();
      },
      py::arg("kappa"), py::arg("lambda_"));

  mod.def(
      "ground_gap",
      [](double a, double b, double k, std::optional<double> m, const std::string& constants) {
        const auto pc = pick(constants);
        return gap01(solve_below_barrier(well_of(a, b, k, m, pc), pc), pc);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("m") = py::none(),
      py::arg("constants") = "");

  mod.def(
      "gap_sweep",
      [](double a, const std::vector<double>& bs, double k, std::optional<double> m,
         const std::string& constants) {
        const auto pc = pick(constants);
        return gap_sweep(well_of(a, bs.empty() ? 0.0 : bs.front(), k, m, pc), bs, pc);
      },
      py::arg("a"), py::arg("b_values"), py::arg("k"), py::arg("m") = py::none(),
      py::arg("constants") = "");

  mod.def("fit_log_gap", [](const std::vector<SweepRow>& rows) { return fit_log_gap(rows); });

  mod.def(
      "find_b_for_gap",
      [](double delta, double a, double b, double k, std::optional<double> m,
         const std::string& constants) {
        const auto pc = pick(constants);
        return find_b_for_gap(delta, well_of(a, b, k, m, pc), pc);
      },
      py::arg("delta"), py::arg("a"), py::arg("b"), py::arg("k"), py::arg("m") = py::none(),
      py::arg("constants") = "");

  mod.def(
      "grid_eigenvalues",
      [](double a, double b, double k, int count, int n, std::optional<double> m,
         const std::string& constants) {
        const auto pc = pick(constants);
        return lowest_eigenvalues(build_grid_hamiltonian(well_of(a, b, k, m, pc), n, pc), count);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("count"), py::arg("n") = 20000,
      py::arg("m") = py::none(), py::arg("constants") = "");

  mod.def(
      "two_level_system",
      [](double a, double b, double k, std::optional<double> m, const std::string& constants) {
        const auto pc = pick(constants);
        return two_level_system(well_of(a, b, k, m, pc), pc);
      },
      py::arg("a"), py::arg("b"), py::arg("k"), py::arg("m") = py::none(),
      py::arg("constants") = "");

  mod.def(
      "flip_flop",
      [](const TwoLevelSystem& sys, double phi, double t) {
        const auto p = flip_flop(sys, phi, t);
        return std::pair{p.first, p.second};
      },
      py::arg("system"), py::arg("phi"), py::arg("t"));

  mod.def(
      "rabi",
      [](const TwoLevelSystem& sys, double amplitude, double omega_prime, double t) {
        const auto p = rabi_off_resonance(sys, {amplitude, omega_prime}, t);
        return std::pair{p.first, p.second};
      },
      py::arg("system"), py::arg("amplitude"), py::arg("omega_prime"), py::arg("t"));

  mod.def(
      "global_bound_T_B",
      [](double a, std::optional<double> m, const std::string& constants) {
        const auto pc = pick(constants);
        return global_bound_T_B(a, m.value_or(pc.m_e), pc);
      },
      py::arg("a"), py::arg("m") = py::none(), py::arg("constants") = "");

  mod.def(
      "classify_examples",
      [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const ExampleState& e : example_states()) {
          out.emplace_back(std::string(to_string(e.expected)),
                           std::string(to_string(classify(e.state))));
        }
        return out;
      });

  mod.def(
      "run",
      [](const std::string& command, const std::vector<std::pair<std::string, std::string>>& settings,
         const std::string& format) {
        cli::RunConfig cfg;
        cfg.command = command;
        for (const auto& [k, v] : settings) cli::apply_setting(cfg, k, v, k);
        cfg.format = format == "json" ? cli::Format::json : cli::Format::csv;
        const cli::Document doc = cli::run_command(cfg);
        return std::pair{cfg.format == cli::Format::json ? cli::render_json(doc) : cli::render_csv(doc),
                         doc.has_error()};
      },
      py::arg("command"), py::arg("settings") = std::vector<std::pair<std::string, std::string>>{},
      py::arg("format") = "json");
}

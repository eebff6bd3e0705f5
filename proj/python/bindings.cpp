// Python bindings for the sliding-mode benchmarking core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smbench/analysis.hpp"
#include "smbench/config.hpp"
#include "smbench/controllers.hpp"
#include "smbench/engine.hpp"
#include "smbench/estimation.hpp"
#include "smbench/plant.hpp"
#include "smbench/surface.hpp"

namespace py = pybind11;
using namespace smbench;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Second-order sliding-mode controller benchmarking toolkit";

  // ---- surface ----
  py::class_<SurfaceSpec>(m, "SurfaceSpec")
      .def(py::init<>())
      .def_readwrite("alpha", &SurfaceSpec::alpha)
      .def_readwrite("u_max", &SurfaceSpec::u_max)
      .def_readwrite("mass", &SurfaceSpec::mass)
      .def_readwrite("input_gain", &SurfaceSpec::input_gain)
      .def_readwrite("reference", &SurfaceSpec::reference)
      .def("delta_eff", &SurfaceSpec::delta_eff)
      .def("twisting_mode", &SurfaceSpec::twisting_mode)
      .def("validate", &SurfaceSpec::validate);
  m.def("sigma", &sigma, py::arg("x1"), py::arg("x2"), py::arg("spec"),
        "Quadratic switching-surface value for shifted state (x1, x2)");

  // ---- controllers ----
  py::enum_<ControllerPhase>(m, "ControllerPhase")
      .value("Initializing", ControllerPhase::Initializing)
      .value("Running", ControllerPhase::Running);
  py::class_<SubOptimalParams>(m, "SubOptimalParams")
      .def(py::init<>())
      .def_readwrite("beta", &SubOptimalParams::beta)
      .def_readwrite("gamma_star", &SubOptimalParams::gamma_star)
      .def_readwrite("u_max", &SubOptimalParams::u_max)
      .def("validate", &SubOptimalParams::validate);
  py::class_<EnergySavingParams>(m, "EnergySavingParams")
      .def(py::init<>())
      .def_readwrite("beta1", &EnergySavingParams::beta1)
      .def_readwrite("beta2", &EnergySavingParams::beta2)
      .def_readwrite("u_max", &EnergySavingParams::u_max)
      .def_readwrite("disturbance_bound", &EnergySavingParams::disturbance_bound)
      .def("validate", &EnergySavingParams::validate);
  py::class_<ControllerState>(m, "ControllerState")
      .def(py::init<>())
      .def_readwrite("sigma_m", &ControllerState::sigma_m)
      .def_readwrite("sigma0", &ControllerState::sigma0)
      .def_readwrite("last_sigma", &ControllerState::last_sigma)
      .def_readwrite("candidate", &ControllerState::candidate)
      .def_readwrite("last_dsigma_sign", &ControllerState::last_dsigma_sign)
      .def_readwrite("phase", &ControllerState::phase)
      .def("reset", &ControllerState::reset, py::arg("sigma_initial"));
  m.def("terminal_step", &terminal_step, py::arg("sigma"), py::arg("u_max"));
  m.def("suboptimal_step", &suboptimal_step, py::arg("sigma"), py::arg("state"),
        py::arg("params"));
  m.def("energy_saving_step", &energy_saving_step, py::arg("sigma"),
        py::arg("state"), py::arg("params"));
  m.def("init_step", &init_step, py::arg("sigma"), py::arg("state"),
        py::arg("u_max"));
  m.def("update_extremum", &update_extremum, py::arg("sigma"), py::arg("state"),
        py::arg("hysteresis"),
        "Peak/valley detector; returns True when a new extremum is latched");
  m.def("gamma_star_lower_bound", &gamma_star_lower_bound, py::arg("beta"),
        py::arg("d_bound"), py::arg("u_max"), py::arg("k_min"), py::arg("k_max"));
  py::class_<FeasibilityResult>(m, "FeasibilityResult")
      .def_readonly("feasible", &FeasibilityResult::feasible)
      .def_readonly("violations", &FeasibilityResult::violations);
  m.def("feasibility_check", &feasibility_check, py::arg("beta1"),
        py::arg("beta2"), py::arg("d_bound"), py::arg("u_max"),
        "Threshold feasibility; lists the violated inequalities when infeasible");

  // ---- plant ----
  py::enum_<DisturbanceKind>(m, "DisturbanceKind")
      .value("NoDisturbance", DisturbanceKind::None)
      .value("Constant", DisturbanceKind::Constant)
      .value("Cogging", DisturbanceKind::Cogging)
      .value("RandomBounded", DisturbanceKind::RandomBounded)
      .value("Mixed", DisturbanceKind::Mixed)
      .value("Adversarial", DisturbanceKind::Adversarial);
  py::class_<DisturbanceModel>(m, "DisturbanceModel")
      .def(py::init<>())
      .def_readwrite("kind", &DisturbanceModel::kind)
      .def_readwrite("constant_bias", &DisturbanceModel::constant_bias)
      .def_readwrite("cogging_amplitude", &DisturbanceModel::cogging_amplitude)
      .def_readwrite("cogging_period", &DisturbanceModel::cogging_period)
      .def_readwrite("random_bound", &DisturbanceModel::random_bound)
      .def_readwrite("random_bandwidth_hz", &DisturbanceModel::random_bandwidth_hz)
      .def_readwrite("bound", &DisturbanceModel::bound)
      .def_readwrite("seed", &DisturbanceModel::seed)
      .def_static("benchmark_default", &DisturbanceModel::benchmark_default,
                  py::arg("total_bound"));
  py::class_<PlantParams>(m, "PlantParams")
      .def(py::init<>())
      .def_readwrite("mass", &PlantParams::mass)
      .def_readwrite("input_gain", &PlantParams::input_gain)
      .def_readwrite("gravity", &PlantParams::gravity)
      .def_readwrite("actuator_tau", &PlantParams::actuator_tau)
      .def_readwrite("disturbance_bound", &PlantParams::disturbance_bound)
      .def_readwrite("sensor_noise_std", &PlantParams::sensor_noise_std)
      .def_readwrite("gravity_comp", &PlantParams::gravity_comp)
      .def("net_gravity", &PlantParams::net_gravity);
  py::class_<DisturbanceState>(m, "DisturbanceState")
      .def(py::init<>())
      .def_readwrite("filtered", &DisturbanceState::filtered)
      .def_readwrite("counter", &DisturbanceState::counter);
  py::class_<PlantState>(m, "PlantState")
      .def(py::init<>())
      .def_readwrite("x", &PlantState::x)
      .def_readwrite("xd", &PlantState::xd)
      .def_readwrite("v", &PlantState::v)
      .def_readwrite("dist", &PlantState::dist);
  m.def("advance_disturbance", &advance_disturbance, py::arg("model"),
        py::arg("state"), py::arg("dt"));
  m.def("disturbance_eval", &disturbance_eval, py::arg("model"), py::arg("state"),
        py::arg("x"), py::arg("u"));
  m.def("plant_step", &plant_step, py::arg("state"), py::arg("u"),
        py::arg("params"), py::arg("model"), py::arg("dt"),
        py::arg("substeps") = 4);

  // ---- estimation ----
  py::class_<LpfParams>(m, "LpfParams")
      .def(py::init<>())
      .def_readwrite("cutoff_hz", &LpfParams::cutoff_hz)
      .def_readwrite("substeps", &LpfParams::substeps)
      .def("omega_c", &LpfParams::omega_c)
      .def("validate", &LpfParams::validate);
  py::class_<LpfState>(m, "LpfState")
      .def(py::init<>())
      .def_readwrite("w", &LpfState::w)
      .def_readwrite("wdot", &LpfState::wdot);
  m.def("differentiate", &differentiate, py::arg("x_now"), py::arg("x_prev"),
        py::arg("dt"));
  m.def("lpf_step", &lpf_step, py::arg("state"), py::arg("raw"), py::arg("dt"),
        py::arg("params"));
  m.def("settling_time", &settling_time, py::arg("cutoff_hz"),
        "Nominal settling time 4.6 / (2*pi*f_c) of the smoothing filter");
  py::class_<VelocityEstimator>(m, "VelocityEstimator")
      .def(py::init<>())
      .def_readwrite("params", &VelocityEstimator::params)
      .def_readwrite("state", &VelocityEstimator::state)
      .def("update", &VelocityEstimator::update, py::arg("x_measured"),
           py::arg("dt"));

  // ---- engine ----
  py::enum_<ControllerKind>(m, "ControllerKind")
      .value("Terminal", ControllerKind::Terminal)
      .value("SubOptimal", ControllerKind::SubOptimal)
      .value("EnergySaving", ControllerKind::EnergySaving);
  m.def("controller_name", &controller_name, py::arg("kind"));
  py::class_<ControllerConfig>(m, "ControllerConfig")
      .def(py::init<>())
      .def_readwrite("kind", &ControllerConfig::kind)
      .def_readwrite("alpha", &ControllerConfig::alpha)
      .def_readwrite("u_max", &ControllerConfig::u_max)
      .def_readwrite("suboptimal", &ControllerConfig::suboptimal)
      .def_readwrite("energy_saving", &ControllerConfig::energy_saving)
      .def_readwrite("hysteresis", &ControllerConfig::hysteresis);
  py::class_<SimConfig>(m, "SimConfig")
      .def(py::init<>())
      .def_readwrite("dt_control", &SimConfig::dt_control)
      .def_readwrite("substeps", &SimConfig::substeps)
      .def_readwrite("duration", &SimConfig::duration)
      .def_readwrite("reference", &SimConfig::reference)
      .def_readwrite("initial_position", &SimConfig::initial_position)
      .def_readwrite("seed", &SimConfig::seed)
      .def_readwrite("tolerance_band", &SimConfig::tolerance_band)
      .def_readwrite("dwell", &SimConfig::dwell)
      .def_readwrite("controller", &SimConfig::controller)
      .def_readwrite("plant", &SimConfig::plant)
      .def_readwrite("disturbance", &SimConfig::disturbance)
      .def_readwrite("lpf", &SimConfig::lpf)
      .def("surface", &SimConfig::surface)
      .def("hysteresis_effective", &SimConfig::hysteresis_effective)
      .def("steps", &SimConfig::steps)
      .def("validate", &SimConfig::validate);
  m.def("paper_default_config", &paper_default_config, py::arg("kind"),
        "Reference configuration of the benchmark experiment");
  py::class_<SimTrace>(m, "SimTrace")
      .def_readonly("dt", &SimTrace::dt)
      .def_readonly("t", &SimTrace::t)
      .def_readonly("x_measured", &SimTrace::x_measured)
      .def_readonly("x_true", &SimTrace::x_true)
      .def_readonly("xd_true", &SimTrace::xd_true)
      .def_readonly("w", &SimTrace::w)
      .def_readonly("sigma", &SimTrace::sigma)
      .def_readonly("sigma_m", &SimTrace::sigma_m)
      .def_readonly("u", &SimTrace::u)
      .def_readonly("v", &SimTrace::v)
      .def_readonly("d", &SimTrace::d)
      .def_readonly("energy", &SimTrace::energy)
      .def("__len__", &SimTrace::size);
  py::class_<RunSummary>(m, "RunSummary")
      .def_readonly("converged", &RunSummary::converged)
      .def_readonly("convergence_time", &RunSummary::convergence_time)
      .def_readonly("energy", &RunSummary::energy)
      .def_readonly("steady_state_error", &RunSummary::steady_state_error)
      .def_readonly("control_on_fraction", &RunSummary::control_on_fraction)
      .def_readonly("residual_amplitude", &RunSummary::residual_amplitude)
      .def_readonly("chattering_detectable", &RunSummary::chattering_detectable);
  py::class_<RunResult>(m, "RunResult")
      .def_readonly("trace", &RunResult::trace)
      .def_readonly("summary", &RunResult::summary);
  m.def("run", &run, py::arg("config"),
        py::call_guard<py::gil_scoped_release>(),
        "Closed-loop simulation; raises on invalid config or numerical fault");
  py::class_<SweepOutcome>(m, "SweepOutcome")
      .def_readonly("ok", &SweepOutcome::ok)
      .def_readonly("summary", &SweepOutcome::summary)
      .def_readonly("error", &SweepOutcome::error);
  m.def("sweep", &sweep, py::arg("configs"),
        py::call_guard<py::gil_scoped_release>());

  // ---- analysis ----
  py::class_<ChatteringPrediction>(m, "ChatteringPrediction")
      .def_readonly("omega", &ChatteringPrediction::omega)
      .def_readonly("amplitude_sigma", &ChatteringPrediction::amplitude_sigma)
      .def_readonly("amplitude_x", &ChatteringPrediction::amplitude_x);
  m.def("predict_chattering", &predict_chattering, py::arg("mu"),
        py::arg("beta1"), py::arg("beta2"));
  py::class_<OscillationEstimate>(m, "OscillationEstimate")
      .def_readonly("omega", &OscillationEstimate::omega)
      .def_readonly("amplitude", &OscillationEstimate::amplitude)
      .def_readonly("crossings", &OscillationEstimate::crossings);
  m.def("measure_oscillation", &measure_oscillation, py::arg("t"), py::arg("y"),
        py::arg("first"), py::arg("last"));
  m.def("measure_trace_oscillation", &measure_trace_oscillation, py::arg("trace"),
        py::arg("dwell"));
  py::class_<CompareReport>(m, "CompareReport")
      .def_readonly("energy_a", &CompareReport::energy_a)
      .def_readonly("energy_b", &CompareReport::energy_b)
      .def_readonly("delta_energy", &CompareReport::delta_energy)
      .def_readonly("converged_a", &CompareReport::converged_a)
      .def_readonly("converged_b", &CompareReport::converged_b)
      .def_readonly("convergence_time_a", &CompareReport::convergence_time_a)
      .def_readonly("convergence_time_b", &CompareReport::convergence_time_b)
      .def_readonly("delta_convergence_time",
                    &CompareReport::delta_convergence_time)
      .def_readonly("steady_state_error_a", &CompareReport::steady_state_error_a)
      .def_readonly("steady_state_error_b", &CompareReport::steady_state_error_b)
      .def_readonly("oscillation_a", &CompareReport::oscillation_a)
      .def_readonly("oscillation_b", &CompareReport::oscillation_b)
      .def_readonly("t", &CompareReport::t)
      .def_readonly("x_a", &CompareReport::x_a)
      .def_readonly("x_b", &CompareReport::x_b)
      .def_readonly("energy_series_a", &CompareReport::energy_series_a)
      .def_readonly("energy_series_b", &CompareReport::energy_series_b);
  m.def("compare_runs", &compare_runs, py::arg("a"), py::arg("b"),
        py::arg("dwell"));
  py::class_<GridCell>(m, "GridCell")
      .def_readonly("beta1", &GridCell::beta1)
      .def_readonly("beta2", &GridCell::beta2)
      .def_readonly("feasible", &GridCell::feasible)
      .def_readonly("converged", &GridCell::converged)
      .def_readonly("j_emp", &GridCell::j_emp)
      .def_readonly("energy", &GridCell::energy)
      .def_readonly("error", &GridCell::error);
  py::class_<TuningResult>(m, "TuningResult")
      .def_readonly("found", &TuningResult::found)
      .def_readonly("beta1", &TuningResult::beta1)
      .def_readonly("beta2", &TuningResult::beta2)
      .def_readonly("j_emp", &TuningResult::j_emp)
      .def_readonly("energy", &TuningResult::energy)
      .def_readonly("j_baseline", &TuningResult::j_baseline)
      .def_readonly("grid", &TuningResult::grid);
  m.def("tune_thresholds", &tune_thresholds, py::arg("d_bound"),
        py::arg("u_equiv"), py::arg("beta1_fixed"), py::arg("grid_res"),
        py::arg("base_config"), py::arg("slack") = 1.0,
        py::call_guard<py::gil_scoped_release>());

  // ---- config ----
  py::class_<LoadedConfig>(m, "LoadedConfig")
      .def_readwrite("sim", &LoadedConfig::sim)
      .def_readwrite("controller_b", &LoadedConfig::controller_b)
      .def_readwrite("run_id", &LoadedConfig::run_id)
      .def_readwrite("out_dir", &LoadedConfig::out_dir);
  m.def("load_config", &load_config, py::arg("path"),
        py::arg("overrides") = std::vector<std::string>{});
  m.def("parse_config", &parse_config, py::arg("json_text"),
        py::arg("overrides") = std::vector<std::string>{});
  m.def("config_to_json", &config_to_json, py::arg("config"));
}

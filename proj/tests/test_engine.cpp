#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "smbench/controllers.hpp"
#include "smbench/engine.hpp"

using namespace smbench;

namespace {

bool identical(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

SimConfig quiet_config(ControllerKind kind) {
  // Noise-free, disturbance-free variant for analytic checks.
  SimConfig c = paper_default_config(kind);
  c.plant.sensor_noise_std = 0.0;
  c.disturbance.kind = DisturbanceKind::None;
  c.duration = 0.6;
  c.dwell = 0.1;
  return c;
}

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / "smbench_engine_tests";
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("engine: benchmark defaults describe the reference rig") {
  const SimConfig c = paper_default_config(ControllerKind::EnergySaving);
  CHECK(c.dt_control == 1e-4);
  CHECK(c.substeps == 4);
  CHECK(c.duration == 1.5);
  CHECK(c.reference == 0.015);
  CHECK(c.initial_position == 0.0);
  CHECK(c.seed == 1);
  CHECK(c.tolerance_band == 2e-4);
  CHECK(c.dwell == 0.2);
  CHECK(c.controller.kind == ControllerKind::EnergySaving);
  CHECK(c.controller.u_max == 0.8);
  CHECK(c.controller.alpha == 1.2);
  CHECK(c.controller.energy_saving.beta1 == 0.85);
  CHECK(c.controller.energy_saving.beta2 == 0.1);
  CHECK(c.plant.mass == 0.538);
  CHECK(c.plant.input_gain == 3.28);
  CHECK(c.plant.actuator_tau == 0.0012);
  CHECK(c.plant.disturbance_bound == 1.0);
  CHECK(c.plant.sensor_noise_std == 4.58e-5);
  CHECK(c.disturbance.kind == DisturbanceKind::Mixed);
  CHECK(c.disturbance.bound == 1.0);
  CHECK(c.lpf.cutoff_hz == 1000.0);
  CHECK(c.steps() == 15000);
  CHECK(c.surface().delta_eff() == doctest::Approx(0.246036585).epsilon(1e-8));
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("engine: hysteresis defaults to twice the sensor noise, override wins") {
  SimConfig c = paper_default_config(ControllerKind::Terminal);
  CHECK(c.hysteresis_effective() == doctest::Approx(2.0 * 4.58e-5).epsilon(1e-12));
  c.controller.hysteresis = 1e-3;
  CHECK(c.hysteresis_effective() == 1e-3);
  c.controller.hysteresis = 0.0;
  CHECK(c.hysteresis_effective() == 0.0);
}

TEST_CASE("engine: configuration guards reject inconsistent runs") {
  SimConfig c = paper_default_config(ControllerKind::Terminal);
  c.duration = 0.1;  // shorter than the dwell window
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = paper_default_config(ControllerKind::Terminal);
  c.tolerance_band = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = paper_default_config(ControllerKind::Terminal);
  c.plant.disturbance_bound = 2.7;  // exceeds K*U = 2.624
  c.disturbance.bound = 2.7;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("authority"),
                       std::invalid_argument);

  c = paper_default_config(ControllerKind::EnergySaving);
  c.controller.energy_saving.beta2 = 0.85;  // equal thresholds are excluded
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("beta2 < beta1"),
                       std::invalid_argument);

  c = paper_default_config(ControllerKind::Terminal);
  c.lpf.substeps = 1;  // 1 kHz cutoff at 10 kHz sampling needs substeps
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = paper_default_config(ControllerKind::Terminal);
  c.initial_position = std::nan("");
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("engine: relay run reaches the setpoint without overshooting the braking bound") {
  const SimConfig c = quiet_config(ControllerKind::Terminal);
  const RunResult r = run(c);
  CHECK(r.summary.converged);
  CHECK(r.summary.convergence_time > 0.0);
  CHECK(r.summary.convergence_time < 0.4);
  CHECK(r.summary.steady_state_error < c.tolerance_band);
  double peak = 0.0;
  for (double x : r.trace.x_true) peak = std::max(peak, x);
  // The braking surface enforces arrival with vanishing speed: any excursion
  // past the setpoint is bounded by the switching quantization, far below the
  // tolerance band.
  CHECK(peak < c.reference + 5e-5);
}

TEST_CASE("engine: trace layout is a fixed-step ledger of the run") {
  SimConfig c = quiet_config(ControllerKind::Terminal);
  c.duration = 0.2;
  const RunResult r = run(c);
  REQUIRE(r.trace.size() == static_cast<std::size_t>(c.steps()));
  CHECK(r.trace.dt == c.dt_control);
  for (std::size_t k = 0; k < r.trace.size(); ++k)
    CHECK(r.trace.t[k] == k * c.dt_control);
  for (std::size_t k = 1; k < r.trace.size(); ++k)
    CHECK(r.trace.energy[k] >= r.trace.energy[k - 1]);
  CHECK(r.trace.energy.back() == r.summary.energy);
}

TEST_CASE("engine: relay consumption equals amplitude times time-on") {
  const SimConfig c = quiet_config(ControllerKind::Terminal);
  const RunResult r = run(c);
  const double t_on = r.summary.control_on_fraction * c.duration;
  CHECK(r.summary.energy ==
        doctest::Approx(c.controller.u_max * t_on).epsilon(1e-9));
}

TEST_CASE("engine: dual-threshold law actually rests part of the time") {
  const RunResult r = run(paper_default_config(ControllerKind::EnergySaving));
  CHECK(r.summary.control_on_fraction < 1.0);
  CHECK(r.summary.control_on_fraction > 0.0);
  const double u_max = 0.8;
  const double t_on = r.summary.control_on_fraction * 1.5;
  CHECK(r.summary.energy <= u_max * t_on + 1e-9);
  CHECK(r.summary.energy > 0.0);
}

TEST_CASE("engine: identical configurations replay to identical traces") {
  const SimConfig c = paper_default_config(ControllerKind::EnergySaving);
  const RunResult a = run(c);
  const RunResult b = run(c);
  CHECK(identical(a.trace.x_measured, b.trace.x_measured));
  CHECK(identical(a.trace.u, b.trace.u));
  CHECK(identical(a.trace.sigma, b.trace.sigma));
  CHECK(identical(a.trace.d, b.trace.d));
  CHECK(identical(a.trace.energy, b.trace.energy));
  CHECK(a.summary.converged == b.summary.converged);
  CHECK(a.summary.energy == b.summary.energy);
}

TEST_CASE("engine: changing the seed changes the measured trace") {
  SimConfig c = paper_default_config(ControllerKind::Terminal);
  c.duration = 0.3;
  c.dwell = 0.1;
  SimConfig c2 = c;
  c2.seed = 2;
  CHECK_FALSE(identical(run(c).trace.x_measured, run(c2).trace.x_measured));
}

TEST_CASE("engine: setpoint shift equals state shift for translation-invariant loads") {
  // Driving to x_r from 0 and driving to 0 from -x_r are the same problem in
  // shifted coordinates, provided the disturbance does not depend on absolute
  // position. The commanded sequences must coincide.
  SimConfig a = paper_default_config(ControllerKind::EnergySaving);
  a.duration = 0.4;
  a.dwell = 0.1;
  a.disturbance.kind = DisturbanceKind::RandomBounded;
  a.disturbance.random_bound = 0.4;
  SimConfig b = a;
  b.reference = 0.0;
  b.initial_position = -a.reference;
  const RunResult ra = run(a);
  const RunResult rb = run(b);
  REQUIRE(ra.trace.size() == rb.trace.size());
  CHECK(identical(ra.trace.u, rb.trace.u));
  double max_gap = 0.0;
  for (std::size_t k = 0; k < ra.trace.size(); ++k)
    max_gap = std::max(max_gap,
                       std::abs(ra.trace.x_true[k] - rb.trace.x_true[k] - a.reference));
  CHECK(max_gap < 1e-12);
}

TEST_CASE("engine: start position knob moves the plant's initial state") {
  SimConfig c = quiet_config(ControllerKind::Terminal);
  c.initial_position = 0.03;  // approach the setpoint from above
  const RunResult r = run(c);
  CHECK(r.trace.x_true.front() == 0.03);
  CHECK(r.summary.converged);
  CHECK(std::abs(r.trace.x_true.back() - c.reference) < c.tolerance_band);
}

TEST_CASE("engine: sweep isolates failures and preserves order") {
  CHECK(sweep({}).empty());

  SimConfig good = quiet_config(ControllerKind::EnergySaving);
  good.duration = 0.2;
  SimConfig bad = good;
  bad.controller.energy_saving.beta2 = 0.95;  // violates beta2 < beta1
  const auto out = sweep({good, bad, good});
  REQUIRE(out.size() == 3);
  CHECK(out[0].ok);
  CHECK_FALSE(out[1].ok);
  CHECK(out[1].error.find("beta2 < beta1") != std::string::npos);
  CHECK(out[2].ok);
  CHECK(out[0].summary.energy == out[2].summary.energy);
}

TEST_CASE("engine: sweep acceptance mask equals the threshold feasibility oracle") {
  std::vector<SimConfig> grid;
  std::vector<bool> oracle;
  SimConfig base = paper_default_config(ControllerKind::EnergySaving);
  base.plant.sensor_noise_std = 0.0;
  base.duration = 0.05;
  base.dwell = 0.02;
  const double d_equiv = base.plant.disturbance_bound / base.plant.input_gain;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      const double b1 = (i + 0.5) / 11.0;
      const double b2 = -1.0 + 2.0 * (j + 0.5) / 11.0;
      SimConfig c = base;
      c.controller.energy_saving.beta1 = b1;
      c.controller.energy_saving.beta2 = b2;
      grid.push_back(c);
      oracle.push_back(
          feasibility_check(b1, b2, d_equiv, base.controller.u_max).feasible);
    }
  }
  const auto out = sweep(grid);
  REQUIRE(out.size() == oracle.size());
  for (std::size_t k = 0; k < out.size(); ++k) CHECK(out[k].ok == oracle[k]);
}

TEST_CASE("engine: summary file round-trips at the declared precision") {
  SimConfig c = quiet_config(ControllerKind::Terminal);
  c.duration = 0.2;
  const RunResult r = run(c);
  const auto path = (scratch_dir() / "roundtrip.summary").string();
  write_summary_file(r.summary, c, path);
  const auto kv = read_key_value_file(path);
  CHECK(kv.at("controller") == "terminal");
  CHECK(kv.at("seed") == "1");
  CHECK(kv.at("converged") == (r.summary.converged ? "true" : "false"));
  CHECK(kv.at("energy_Vs") == format_value(r.summary.energy));
  CHECK(kv.at("convergence_time_s") == format_value(r.summary.convergence_time));
  CHECK(kv.at("steady_state_error_m") == format_value(r.summary.steady_state_error));
  // Nine significant digits survive the text round-trip to within 1 ulp of 1e-9.
  const double back = std::strtod(kv.at("energy_Vs").c_str(), nullptr);
  CHECK(back == doctest::Approx(r.summary.energy).epsilon(1e-8));
}

TEST_CASE("engine: trace file carries the full column set") {
  SimConfig c = quiet_config(ControllerKind::Terminal);
  c.duration = 0.11;
  const RunResult r = run(c);
  const auto path = (scratch_dir() / "roundtrip.trace.csv").string();
  write_trace_csv(r.trace, path);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string header;
  std::getline(f, header);
  CHECK(header == "t,x_measured,x_true,xdot_true,w,sigma,sigma_m,u,v,d,E_cumulative");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(f, line))
    if (!line.empty()) ++rows;
  CHECK(rows == r.trace.size());
}

TEST_CASE("engine: controller names are stable identifiers") {
  CHECK(controller_name(ControllerKind::Terminal) == "terminal");
  CHECK(controller_name(ControllerKind::SubOptimal) == "suboptimal");
  CHECK(controller_name(ControllerKind::EnergySaving) == "energy_saving");
}

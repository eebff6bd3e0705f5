#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smbench/controllers.hpp"
#include "smbench/estimation.hpp"
#include "smbench/plant.hpp"
#include "smbench/surface.hpp"

namespace smbench {

enum class ControllerKind { Terminal, SubOptimal, EnergySaving };

std::string controller_name(ControllerKind kind);

struct ControllerConfig {
  ControllerKind kind = ControllerKind::Terminal;
  double alpha = 1.2;  // surface shape
  double u_max = 0.8;  // shared control amplitude U [V]
  SubOptimalParams suboptimal{};
  EnergySavingParams energy_saving{};
  /// Extremum-detector hysteresis; negative = auto (2x the sensor-noise std
  /// propagated through the surface at rest, where d(sigma)/dx1 = 1).
  double hysteresis = -1.0;
};

struct SimConfig {
  double dt_control = 1e-4;  // control period [s], 10 kHz
  int substeps = 4;          // integrator substeps per control period
  double duration = 1.5;     // [s]
  double reference = 0.015;       // setpoint x_r [m]
  double initial_position = 0.0;  // plant starts at rest here [m]
  std::uint64_t seed = 1;
  double tolerance_band = 2e-4;  // convergence band on |x - x_r| [m]
  double dwell = 0.2;            // band must hold this long [s]

  ControllerConfig controller;
  PlantParams plant;
  DisturbanceModel disturbance;
  LpfParams lpf;

  SurfaceSpec surface() const;
  double hysteresis_effective() const;
  int steps() const;
  void validate() const;
};

/// Paper-parameter configuration with the default benchmark disturbance.
SimConfig paper_default_config(ControllerKind kind);

/// Columnar time series logged once per control period.
struct SimTrace {
  double dt = 0.0;
  std::vector<double> t, x_measured, x_true, xd_true, w, sigma, sigma_m, u, v, d,
      energy;
  std::size_t size() const { return t.size(); }
};

struct RunSummary {
  bool converged = false;
  double convergence_time = -1.0;    // start of the first sustained in-band dwell [s]
  double energy = 0.0;               // integral of |u_sm| dt [V s]
  double steady_state_error = 0.0;   // max |x - x_r| over the final dwell [m]
  double control_on_fraction = 0.0;  // fraction of samples with u_sm != 0
  double residual_amplitude = 0.0;   // half peak-to-peak of x over the final dwell [m]
  bool chattering_detectable = false;  // residual amplitude above the sensor noise std
};

struct RunResult {
  SimTrace trace;
  RunSummary summary;
};

/// Closed-loop run: measure -> differentiate+filter -> shift -> sigma ->
/// update extremum -> switching law (+ gravity compensation) -> plant step.
/// Throws on invalid configs and on numerical blow-up; non-convergence is a
/// regular outcome reported through the summary.
RunResult run(const SimConfig& config);

struct SweepOutcome {
  bool ok = false;
  RunSummary summary{};
  std::string error;  // non-empty when the run was rejected or failed
};

/// Independent runs; per-run errors are collected, never fatal to the sweep.
std::vector<SweepOutcome> sweep(const std::vector<SimConfig>& configs);

/// Compute the summary for a finished trace (exposed for analysis tooling).
RunSummary summarize(const SimTrace& trace, const SimConfig& config);

void write_trace_csv(const SimTrace& trace, const std::string& path);
void write_summary_file(const RunSummary& summary, const SimConfig& config,
                        const std::string& path);
/// Parse a summary file back into key/value form (round-trip checks, tooling).
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/// Format a double with 9 significant digits (the declared file precision).
std::string format_value(double v);

}  // namespace smbench

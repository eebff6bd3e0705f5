#include "smbench/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace smbench {
namespace {

// Salts keep the sensor and disturbance streams decorrelated per run seed.
constexpr std::uint64_t kSensorSalt = 0x53454E534F520001ULL;
constexpr std::uint64_t kDisturbSalt = 0x4449535455520002ULL;

}  // namespace

std::string controller_name(ControllerKind kind) {
  switch (kind) {
    case ControllerKind::Terminal: return "terminal";
    case ControllerKind::SubOptimal: return "suboptimal";
    case ControllerKind::EnergySaving: return "energy_saving";
  }
  return "unknown";
}

SurfaceSpec SimConfig::surface() const {
  return SurfaceSpec{controller.alpha, controller.u_max, plant.mass, plant.input_gain,
                     reference};
}

double SimConfig::hysteresis_effective() const {
  return controller.hysteresis >= 0.0 ? controller.hysteresis
                                      : 2.0 * plant.sensor_noise_std;
}

int SimConfig::steps() const { return static_cast<int>(std::llround(duration / dt_control)); }

void SimConfig::validate() const {
  if (!(dt_control > 0.0)) throw std::invalid_argument("sim: dt_control must be positive");
  if (substeps < 1) throw std::invalid_argument("sim: substeps must be >= 1");
  if (!(duration >= dwell))
    throw std::invalid_argument("sim: duration must cover at least one dwell window");
  if (!(tolerance_band > 0.0))
    throw std::invalid_argument("sim: tolerance_band must be positive");
  if (!std::isfinite(reference) || !std::isfinite(initial_position))
    throw std::invalid_argument("sim: reference and initial_position must be finite");
  if (!(dwell > 0.0)) throw std::invalid_argument("sim: dwell must be positive");
  plant.validate();
  disturbance.validate();
  surface().validate();
  lpf.check_stability(dt_control);
  if (!(plant.input_gain * controller.u_max > plant.disturbance_bound))
    throw std::invalid_argument(
        "sim: control authority K*U must exceed the disturbance bound D");
  switch (controller.kind) {
    case ControllerKind::Terminal:
      break;
    case ControllerKind::SubOptimal: {
      SubOptimalParams p = controller.suboptimal;
      p.u_max = controller.u_max;
      p.validate();
      break;
    }
    case ControllerKind::EnergySaving: {
      EnergySavingParams p = controller.energy_saving;
      p.u_max = controller.u_max;
      p.disturbance_bound = plant.disturbance_bound / plant.input_gain;
      p.validate();
      break;
    }
  }
}

SimConfig paper_default_config(ControllerKind kind) {
  SimConfig c;  // field defaults are the paper parameters
  c.controller.kind = kind;
  c.disturbance = DisturbanceModel::benchmark_default(c.plant.disturbance_bound);
  return c;
}

RunResult run(const SimConfig& config) {
  config.validate();

  const SurfaceSpec surf = config.surface();
  const double dt = config.dt_control;
  const int n = config.steps();
  const double hyst = config.hysteresis_effective();
  const double u_max = config.controller.u_max;

  DisturbanceModel model = config.disturbance;
  if (model.seed == 0) model.seed = config.seed ^ kDisturbSalt;

  SubOptimalParams so = config.controller.suboptimal;
  so.u_max = u_max;
  EnergySavingParams es = config.controller.energy_saving;
  es.u_max = u_max;
  es.disturbance_bound = config.plant.disturbance_bound / config.plant.input_gain;

  NoiseStream sensor(config.seed ^ kSensorSalt);
  PlantState plant{};
  plant.x = config.initial_position;
  VelocityEstimator vel{config.lpf, {}, 0.0, false};
  ControllerState ctl{};

  SimTrace tr;
  tr.dt = dt;
  for (auto* col : {&tr.t, &tr.x_measured, &tr.x_true, &tr.xd_true, &tr.w, &tr.sigma,
                    &tr.sigma_m, &tr.u, &tr.v, &tr.d, &tr.energy})
    col->reserve(n);

  double energy = 0.0;
  long on_samples = 0;

  for (int k = 0; k < n; ++k) {
    const double t = k * dt;
    const double xm = measure(plant, config.plant, sensor);
    const double w = vel.update(xm, dt);
    const double s = sigma(xm - config.reference, w, surf);

    if (k == 0) {
      ctl.reset(s);
    } else {
      update_extremum(s, ctl, hyst);
    }

    double u_sm = 0.0;
    switch (config.controller.kind) {
      case ControllerKind::Terminal:
        u_sm = terminal_step(s, u_max);
        break;
      case ControllerKind::SubOptimal:
        u_sm = (ctl.phase == ControllerPhase::Initializing) ? init_step(s, ctl, u_max)
                                                            : suboptimal_step(s, ctl, so);
        break;
      case ControllerKind::EnergySaving:
        u_sm = (ctl.phase == ControllerPhase::Initializing)
                   ? init_step(s, ctl, u_max)
                   : energy_saving_step(s, ctl, es);
        break;
    }

    energy += std::abs(u_sm) * dt;  // rectangle rule on the switching component
    if (u_sm != 0.0) ++on_samples;

    advance_disturbance(model, plant.dist, dt);
    const double d_applied = disturbance_eval(model, plant.dist, plant.x, u_sm);

    tr.t.push_back(t);
    tr.x_measured.push_back(xm);
    tr.x_true.push_back(plant.x);
    tr.xd_true.push_back(plant.xd);
    tr.w.push_back(w);
    tr.sigma.push_back(s);
    tr.sigma_m.push_back(ctl.sigma_m);
    tr.u.push_back(u_sm + config.plant.gravity_comp);  // composite commanded voltage
    tr.v.push_back(plant.v);
    tr.d.push_back(d_applied);
    tr.energy.push_back(energy);

    plant = plant_step(plant, u_sm, config.plant, model, dt, config.substeps);
  }

  RunSummary sm = summarize(tr, config);
  sm.energy = energy;
  sm.control_on_fraction = n > 0 ? static_cast<double>(on_samples) / n : 0.0;
  return RunResult{std::move(tr), sm};
}

RunSummary summarize(const SimTrace& trace, const SimConfig& config) {
  RunSummary sm;
  const std::size_t n = trace.size();
  if (n == 0) return sm;
  const std::size_t window =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::llround(config.dwell / trace.dt)));
  const double band = config.tolerance_band;
  const double ref = config.reference;

  if (!trace.energy.empty()) sm.energy = trace.energy.back();

  // Earliest window of dwell length held entirely inside the band.
  std::size_t run_len = 0;
  for (std::size_t i = 0; i < n && !sm.converged; ++i) {
    if (std::abs(trace.x_true[i] - ref) < band) {
      if (++run_len >= window) {
        sm.converged = true;
        sm.convergence_time = trace.t[i + 1 - window];
      }
    } else {
      run_len = 0;
    }
  }

  // Final dwell window statistics.
  const std::size_t start = n - window;
  double max_err = 0.0, lo = trace.x_true[start], hi = trace.x_true[start];
  for (std::size_t i = start; i < n; ++i) {
    max_err = std::max(max_err, std::abs(trace.x_true[i] - ref));
    lo = std::min(lo, trace.x_true[i]);
    hi = std::max(hi, trace.x_true[i]);
  }
  sm.steady_state_error = max_err;
  sm.residual_amplitude = 0.5 * (hi - lo);
  sm.chattering_detectable = sm.residual_amplitude > config.plant.sensor_noise_std;
  return sm;
}

std::vector<SweepOutcome> sweep(const std::vector<SimConfig>& configs) {
  std::vector<SweepOutcome> out;
  out.reserve(configs.size());
  for (const auto& cfg : configs) {
    SweepOutcome o;
    try {
      o.summary = run(cfg).summary;
      o.ok = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_trace_csv(const SimTrace& trace, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open trace file for writing: " + path);
  f << "t,x_measured,x_true,xdot_true,w,sigma,sigma_m,u,v,d,E_cumulative\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    f << format_value(trace.t[i]) << ',' << format_value(trace.x_measured[i]) << ','
      << format_value(trace.x_true[i]) << ',' << format_value(trace.xd_true[i]) << ','
      << format_value(trace.w[i]) << ',' << format_value(trace.sigma[i]) << ','
      << format_value(trace.sigma_m[i]) << ',' << format_value(trace.u[i]) << ','
      << format_value(trace.v[i]) << ',' << format_value(trace.d[i]) << ','
      << format_value(trace.energy[i]) << '\n';
  }
}

void write_summary_file(const RunSummary& summary, const SimConfig& config,
                        const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open summary file for writing: " + path);
  f << "controller = " << controller_name(config.controller.kind) << '\n'
    << "seed = " << config.seed << '\n'
    << "duration_s = " << format_value(config.duration) << '\n'
    << "dt_control_s = " << format_value(config.dt_control) << '\n'
    << "reference_m = " << format_value(config.reference) << '\n'
    << "converged = " << (summary.converged ? "true" : "false") << '\n'
    << "convergence_time_s = " << format_value(summary.convergence_time) << '\n'
    << "energy_Vs = " << format_value(summary.energy) << '\n'
    << "steady_state_error_m = " << format_value(summary.steady_state_error) << '\n'
    << "control_on_fraction = " << format_value(summary.control_on_fraction) << '\n'
    << "residual_amplitude_m = " << format_value(summary.residual_amplitude) << '\n'
    << "chattering_detectable = " << (summary.chattering_detectable ? "true" : "false")
    << '\n';
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(f, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return kv;
}

}  // namespace smbench

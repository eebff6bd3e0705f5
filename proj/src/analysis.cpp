#include "smbench/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

namespace smbench {

ChatteringPrediction predict_chattering(double mu, double beta1, double beta2) {
  if (!(mu > 0.0)) throw std::domain_error("predict_chattering: mu must be positive");
  if (!(std::abs(beta1) < 1.0 && std::abs(beta2) < 1.0))
    throw std::domain_error("predict_chattering: thresholds must satisfy |beta| < 1");
  if (!(beta1 + beta2 > 0.0))
    throw std::domain_error(
        "predict_chattering: beta1 + beta2 must be positive (no oscillatory solution)");
  ChatteringPrediction p;
  p.omega = (beta1 + beta2) /
            (mu * (std::sqrt(1.0 - beta1 * beta1) + std::sqrt(1.0 - beta2 * beta2)));
  const double mw2 = mu * mu * p.omega * p.omega;
  p.amplitude_sigma = std::sqrt(mw2 + 1.0) / (p.omega * p.omega * (mw2 + 1.0));
  // Near the origin the quadratic surface term vanishes, so the position
  // oscillation matches the sigma oscillation.
  p.amplitude_x = p.amplitude_sigma;
  return p;
}

OscillationEstimate measure_oscillation(const std::vector<double>& t,
                                        const std::vector<double>& y,
                                        std::size_t first, std::size_t last) {
  OscillationEstimate est;
  if (last > y.size() || first >= last) return est;
  double mean = 0.0;
  for (std::size_t i = first; i < last; ++i) mean += y[i];
  mean /= static_cast<double>(last - first);

  double lo = y[first], hi = y[first];
  double prev_sign = 0.0, first_cross = 0.0, last_cross = 0.0;
  int crossings = 0;
  for (std::size_t i = first; i < last; ++i) {
    lo = std::min(lo, y[i]);
    hi = std::max(hi, y[i]);
    const double s = sign_of(y[i] - mean);
    if (s != 0.0) {
      if (prev_sign != 0.0 && s != prev_sign) {
        if (crossings == 0) first_cross = t[i];
        last_cross = t[i];
        ++crossings;
      }
      prev_sign = s;
    }
  }
  est.amplitude = 0.5 * (hi - lo);
  est.crossings = crossings;
  if (crossings >= 2 && last_cross > first_cross) {
    const double half_period = (last_cross - first_cross) / (crossings - 1);
    est.omega = std::numbers::pi / half_period;
  }
  return est;
}

OscillationEstimate measure_trace_oscillation(const SimTrace& trace, double dwell) {
  const std::size_t n = trace.size();
  if (n == 0 || !(trace.dt > 0.0)) return {};
  const std::size_t window =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::llround(dwell / trace.dt)));
  return measure_oscillation(trace.t, trace.sigma, n - window, n);
}

CompareReport compare_runs(const RunResult& a, const RunResult& b, double dwell) {
  if (a.trace.size() != b.trace.size() || a.trace.dt != b.trace.dt)
    throw std::invalid_argument("compare_runs: traces must share dt and duration");
  CompareReport r;
  r.energy_a = a.summary.energy;
  r.energy_b = b.summary.energy;
  r.delta_energy = r.energy_a - r.energy_b;
  r.converged_a = a.summary.converged;
  r.converged_b = b.summary.converged;
  r.convergence_time_a = a.summary.convergence_time;
  r.convergence_time_b = b.summary.convergence_time;
  // The sentinel -1 of a non-converged run would poison the difference.
  r.delta_convergence_time =
      (r.converged_a && r.converged_b)
          ? r.convergence_time_a - r.convergence_time_b
          : std::numeric_limits<double>::quiet_NaN();
  r.steady_state_error_a = a.summary.steady_state_error;
  r.steady_state_error_b = b.summary.steady_state_error;
  r.oscillation_a = measure_trace_oscillation(a.trace, dwell);
  r.oscillation_b = measure_trace_oscillation(b.trace, dwell);
  r.t = a.trace.t;
  r.x_a = a.trace.x_true;
  r.x_b = b.trace.x_true;
  r.energy_series_a = a.trace.energy;
  r.energy_series_b = b.trace.energy;
  return r;
}

TuningResult tune_thresholds(double d_bound, double u_equiv,
                             std::optional<double> beta1_fixed, int grid_res,
                             const SimConfig& base_config, double slack) {
  if (!(d_bound >= 0.0 && u_equiv > 0.0 && d_bound < u_equiv))
    throw std::invalid_argument("tune_thresholds: need 0 <= D < U (consistent units)");
  if (grid_res < 3) throw std::invalid_argument("tune_thresholds: grid_res must be >= 3");
  if (!(slack > 0.0)) throw std::invalid_argument("tune_thresholds: slack must be positive");

  const double inf = std::numeric_limits<double>::infinity();
  const double ratio2 = 2.0 * d_bound / u_equiv;

  // Noise-free template with the worst-case matched disturbance at bound D.
  SimConfig base = base_config;
  base.plant.sensor_noise_std = 0.0;
  base.plant.disturbance_bound = d_bound;
  base.disturbance = DisturbanceModel{};
  base.disturbance.kind = DisturbanceKind::Adversarial;
  base.disturbance.bound = d_bound;

  auto cost_of = [](const RunSummary& s, double inf_val) {
    return s.converged ? s.convergence_time : inf_val;
  };

  auto run_energy_saving = [&](double b1, double b2) {
    SimConfig c = base;
    c.controller.kind = ControllerKind::EnergySaving;
    c.controller.energy_saving.beta1 = b1;
    c.controller.energy_saving.beta2 = b2;
    return run(c).summary;
  };
  auto run_baseline = [&](double b1) {
    SimConfig c = base;
    c.controller.kind = ControllerKind::SubOptimal;
    c.controller.suboptimal.beta = b1;
    c.controller.suboptimal.gamma_star = 1.0;
    return run(c).summary;
  };

  std::vector<double> beta1_values;
  if (beta1_fixed) {
    beta1_values.push_back(*beta1_fixed);
  } else {
    for (int j = 0; j < grid_res; ++j)
      beta1_values.push_back((j + 0.5) / grid_res);  // interior of [0, 1)
  }

  TuningResult result;
  double best_energy = inf, best_j = inf;
  for (double b1 : beta1_values) {
    const double j_hat = cost_of(run_baseline(b1), inf);
    const double lo = std::max(-1.0, ratio2 - b1);
    const double hi = b1;
    for (int i = 0; i < grid_res; ++i) {
      GridCell cell;
      cell.beta1 = b1;
      // Strictly interior points of the feasible beta2 interval.
      cell.beta2 = lo + (hi - lo) * (i + 1) / (grid_res + 1);
      const FeasibilityResult feas =
          feasibility_check(cell.beta1, cell.beta2, d_bound, u_equiv);
      cell.feasible = feas.feasible;
      if (!feas.feasible) {
        for (const auto& v : feas.violations)
          cell.error += (cell.error.empty() ? "" : "; ") + v;
        cell.j_emp = inf;
        cell.energy = inf;
        result.grid.push_back(cell);
        continue;
      }
      const RunSummary s = run_energy_saving(cell.beta1, cell.beta2);
      cell.converged = s.converged;
      cell.j_emp = cost_of(s, inf);
      cell.energy = s.energy;
      result.grid.push_back(cell);

      const bool qualifies = s.converged && cell.j_emp < slack * j_hat;
      if (qualifies && (cell.energy < best_energy ||
                        (cell.energy == best_energy && cell.j_emp < best_j))) {
        best_energy = cell.energy;
        best_j = cell.j_emp;
        result.found = true;
        result.beta1 = cell.beta1;
        result.beta2 = cell.beta2;
        result.j_emp = cell.j_emp;
        result.energy = cell.energy;
        result.j_baseline = j_hat;
      }
    }
  }
  return result;
}

void write_compare_csv(const CompareReport& report, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open compare file for writing: " + path);
  f << "t,x_a,x_b,E_a,E_b\n";
  for (std::size_t i = 0; i < report.t.size(); ++i) {
    f << format_value(report.t[i]) << ',' << format_value(report.x_a[i]) << ','
      << format_value(report.x_b[i]) << ',' << format_value(report.energy_series_a[i])
      << ',' << format_value(report.energy_series_b[i]) << '\n';
  }
}

void write_compare_report(const CompareReport& report,
                          const std::optional<ChatteringPrediction>& prediction,
                          double sensor_noise_std, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open report file for writing: " + path);
  f << "converged_a = " << (report.converged_a ? "true" : "false") << '\n'
    << "converged_b = " << (report.converged_b ? "true" : "false") << '\n'
    << "convergence_time_a_s = " << format_value(report.convergence_time_a) << '\n'
    << "convergence_time_b_s = " << format_value(report.convergence_time_b) << '\n'
    << "delta_convergence_time_s = " << format_value(report.delta_convergence_time) << '\n'
    << "energy_a_Vs = " << format_value(report.energy_a) << '\n'
    << "energy_b_Vs = " << format_value(report.energy_b) << '\n'
    << "delta_energy_Vs = " << format_value(report.delta_energy) << '\n'
    << "steady_state_error_a_m = " << format_value(report.steady_state_error_a) << '\n'
    << "steady_state_error_b_m = " << format_value(report.steady_state_error_b) << '\n'
    << "measured_osc_omega_a_rad_s = " << format_value(report.oscillation_a.omega) << '\n'
    << "measured_osc_amplitude_a_m = " << format_value(report.oscillation_a.amplitude)
    << '\n'
    << "measured_osc_omega_b_rad_s = " << format_value(report.oscillation_b.omega) << '\n'
    << "measured_osc_amplitude_b_m = " << format_value(report.oscillation_b.amplitude)
    << '\n';
  if (prediction) {
    const bool detectable = prediction->amplitude_x >= sensor_noise_std;
    f << "predicted_omega_rad_s = " << format_value(prediction->omega) << '\n'
      << "predicted_amplitude_x_m = " << format_value(prediction->amplitude_x) << '\n'
      << "sensor_noise_std_m = " << format_value(sensor_noise_std) << '\n'
      << "chattering_detectable = " << (detectable ? "true" : "false") << '\n';
  }
}

void write_grid_csv(const TuningResult& result, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open grid file for writing: " + path);
  f << "beta1,beta2,feasible,converged,J_emp,E\n";
  for (const auto& c : result.grid) {
    f << format_value(c.beta1) << ',' << format_value(c.beta2) << ','
      << (c.feasible ? 1 : 0) << ',' << (c.converged ? 1 : 0) << ','
      << format_value(c.j_emp) << ',' << format_value(c.energy) << '\n';
  }
}

void write_tuning_summary(const TuningResult& result, double slack,
                          const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open tuning file for writing: " + path);
  int feasible = 0;
  for (const auto& c : result.grid) feasible += c.feasible ? 1 : 0;
  f << "found = " << (result.found ? "true" : "false") << '\n'
    << "beta1 = " << format_value(result.beta1) << '\n'
    << "beta2 = " << format_value(result.beta2) << '\n'
    << "J_emp_s = " << format_value(result.j_emp) << '\n'
    << "J_baseline_s = " << format_value(result.j_baseline) << '\n'
    << "energy_Vs = " << format_value(result.energy) << '\n'
    << "slack = " << format_value(slack) << '\n'
    << "cells_total = " << result.grid.size() << '\n'
    << "cells_feasible = " << feasible << '\n';
}

}  // namespace smbench

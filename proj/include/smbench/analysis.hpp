#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smbench/engine.hpp"

namespace smbench {

/// Harmonic-balance steady-oscillation estimate for the energy-saving law
/// switching through the actuator lag mu.
struct ChatteringPrediction {
  double omega = 0.0;            // angular frequency [rad/s]
  double amplitude_sigma = 0.0;  // oscillation amplitude of sigma [m]
  double amplitude_x = 0.0;      // position amplitude near the origin (= A_sigma)
};

/// omega = (beta1 + beta2) / (mu * (sqrt(1-beta1^2) + sqrt(1-beta2^2))),
/// A_sigma = sqrt(mu^2 w^2 + 1) / (w^2 (mu^2 w^2 + 1)). Requires mu > 0,
/// |beta| < 1 and beta1 + beta2 > 0 (otherwise no positive-frequency solution).
ChatteringPrediction predict_chattering(double mu, double beta1, double beta2);

/// Zero-crossing measurement of a residual oscillation: mean crossing interval
/// of y - mean(y) gives the frequency, half the peak-to-peak the amplitude.
struct OscillationEstimate {
  double omega = 0.0;
  double amplitude = 0.0;
  int crossings = 0;
};

OscillationEstimate measure_oscillation(const std::vector<double>& t,
                                        const std::vector<double>& y,
                                        std::size_t first, std::size_t last);

/// Measure the oscillation of sigma over the final dwell window of a trace.
OscillationEstimate measure_trace_oscillation(const SimTrace& trace, double dwell);

struct CompareReport {
  double energy_a = 0.0, energy_b = 0.0;
  double delta_energy = 0.0;  // energy_a - energy_b
  bool converged_a = false, converged_b = false;
  double convergence_time_a = -1.0, convergence_time_b = -1.0;
  double delta_convergence_time = 0.0;
  double steady_state_error_a = 0.0, steady_state_error_b = 0.0;
  OscillationEstimate oscillation_a, oscillation_b;
  // Aligned series for plotting / CSV export.
  std::vector<double> t, x_a, x_b, energy_series_a, energy_series_b;
};

/// Requires both runs to share dt and sample count.
CompareReport compare_runs(const RunResult& a, const RunResult& b, double dwell);

struct GridCell {
  double beta1 = 0.0, beta2 = 0.0;
  bool feasible = false;
  bool converged = false;
  double j_emp = 0.0;   // convergence-time proxy [s]; infinity when not converged
  double energy = 0.0;  // switching energy of the cell's run [V s]
  std::string error;    // rejection reason for infeasible cells
};

struct TuningResult {
  bool found = false;
  double beta1 = 0.0, beta2 = 0.0;
  double j_emp = 0.0;
  double energy = 0.0;
  double j_baseline = 0.0;  // sub-optimal (beta2 = beta1) cost at the chosen beta1
  std::vector<GridCell> grid;
};

/// Empirical threshold search: noise-free grid runs against the worst-case
/// matched disturbance d = -D*sign(u); per cell the convergence-time proxy
/// J_emp and the energy E are recorded. Baseline J-hat per beta1 uses the
/// degenerate beta2 = beta1 sub-optimal law. Returns the feasible pair of
/// minimal energy subject to J_emp < slack * J-hat; d_bound and u_equiv are
/// the consistent-unit pair (newtons: D and K*U).
TuningResult tune_thresholds(double d_bound, double u_equiv,
                             std::optional<double> beta1_fixed, int grid_res,
                             const SimConfig& base_config, double slack = 1.0);

void write_compare_csv(const CompareReport& report, const std::string& path);
void write_compare_report(const CompareReport& report,
                          const std::optional<ChatteringPrediction>& prediction,
                          double sensor_noise_std, const std::string& path);
void write_grid_csv(const TuningResult& result, const std::string& path);
void write_tuning_summary(const TuningResult& result, double slack,
                          const std::string& path);

}  // namespace smbench

#pragma once

#include "smbench/common.hpp"

namespace smbench {

/// Backward difference (x_now - x_prev) / dt; dt must be positive.
double differentiate(double x_now, double x_prev, double dt);

/// Critically damped second-order low-pass
/// w'' + 2*wc*w' + wc^2*w = wc^2 * r, wc = 2*pi*cutoff_hz.
struct LpfParams {
  double cutoff_hz = 1000.0;
  int substeps = 4;  // explicit 4-stage substeps per filter update

  double omega_c() const;
  /// Rejects configurations violating the per-substep stability bound
  /// dt * omega_c < 0.5.
  void check_stability(double dt) const;
  void validate() const;
};

struct LpfState {
  double w = 0.0;     // filtered output
  double wdot = 0.0;  // its derivative
};

/// Advance the filter one control period with the raw input held constant.
void lpf_step(LpfState& state, double raw, double dt, const LpfParams& params);

/// First-order 1%-settling estimate 4.6 / (2*pi*cutoff_hz) [s].
double settling_time(double cutoff_hz);

/// Convenience wrapper chaining the backward difference and the filter the
/// way the closed loop uses them.
struct VelocityEstimator {
  LpfParams params;
  LpfState state;
  double last_x = 0.0;
  bool primed = false;

  /// Feed one position sample; returns the filtered velocity estimate.
  double update(double x_measured, double dt);
  double velocity() const { return state.w; }
};

}  // namespace smbench

#include "smbench/estimation.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace smbench {

double differentiate(double x_now, double x_prev, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("differentiate: dt must be positive");
  return (x_now - x_prev) / dt;
}

double LpfParams::omega_c() const { return 2.0 * std::numbers::pi * cutoff_hz; }

void LpfParams::validate() const {
  if (!(cutoff_hz > 0.0) || !std::isfinite(cutoff_hz))
    throw std::invalid_argument("lpf: cutoff_hz must be positive");
  if (substeps < 1) throw std::invalid_argument("lpf: substeps must be >= 1");
}

void LpfParams::check_stability(double dt) const {
  validate();
  const double h = dt / substeps;
  if (!(h * omega_c() < 0.5))
    throw std::invalid_argument(
        "lpf: discretization unstable, dt*omega_c = " + std::to_string(h * omega_c()) +
        " per substep (need < 0.5); lower the cutoff or raise substeps");
}

void lpf_step(LpfState& state, double raw, double dt, const LpfParams& params) {
  params.check_stability(dt);
  const double wc = params.omega_c();
  const double wc2 = wc * wc;
  const double h = dt / params.substeps;
  auto wddot = [&](double w, double wdot) { return wc2 * (raw - w) - 2.0 * wc * wdot; };
  for (int i = 0; i < params.substeps; ++i) {
    const double k1w = state.wdot;
    const double k1z = wddot(state.w, state.wdot);
    const double k2w = state.wdot + 0.5 * h * k1z;
    const double k2z = wddot(state.w + 0.5 * h * k1w, state.wdot + 0.5 * h * k1z);
    const double k3w = state.wdot + 0.5 * h * k2z;
    const double k3z = wddot(state.w + 0.5 * h * k2w, state.wdot + 0.5 * h * k2z);
    const double k4w = state.wdot + h * k3z;
    const double k4z = wddot(state.w + h * k3w, state.wdot + h * k3z);
    state.w += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
    state.wdot += h / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
  }
}

double settling_time(double cutoff_hz) {
  if (!(cutoff_hz > 0.0))
    throw std::invalid_argument("settling_time: cutoff_hz must be positive");
  return 4.6 / (2.0 * std::numbers::pi * cutoff_hz);
}

double VelocityEstimator::update(double x_measured, double dt) {
  double raw = 0.0;
  if (primed) {
    raw = differentiate(x_measured, last_x, dt);
  } else {
    primed = true;  // first sample: no history, treat the velocity as zero
  }
  last_x = x_measured;
  lpf_step(state, raw, dt, params);
  return state.w;
}

}  // namespace smbench

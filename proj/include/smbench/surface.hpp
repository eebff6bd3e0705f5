#pragma once

#include "smbench/common.hpp"

namespace smbench {

/// Quadratic terminal sliding surface shared by all controllers.
///
/// The surface lives in error coordinates x1 = x - x_r, x2 = dx/dt and is the
/// locus sigma = 0 of full-authority braking parabolas scaled by alpha:
/// alpha = 0.5 is the minimum-time boundary, larger alpha brakes earlier.
struct SurfaceSpec {
  double alpha = 1.2;        // parabola scale; <= 0.5 degenerates to twisting mode
  double u_max = 0.8;        // control amplitude U [V]
  double mass = 0.538;       // mover inertia m [kg]
  double input_gain = 3.28;  // actuator gain K [N/V]
  double reference = 0.015;  // setpoint x_r [m]

  /// Curvature coefficient alpha / a_max with a_max = K*U/m [s^2/m].
  double delta_eff() const { return alpha * mass / (input_gain * u_max); }

  /// True when alpha gives the twisting rather than the terminal mode.
  bool twisting_mode() const { return alpha <= 0.5; }

  void validate() const;
};

/// sigma = x1 + delta_eff * x2^2 * sign(x2).
/// Total on finite inputs; non-finite x1/x2 are a configuration fault.
double sigma(double x1, double x2, const SurfaceSpec& spec);

}  // namespace smbench

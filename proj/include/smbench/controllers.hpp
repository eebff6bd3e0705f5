#pragma once

#include <string>
#include <vector>

#include "smbench/common.hpp"

namespace smbench {

/// Original sub-optimal second-order sliding-mode law.
struct SubOptimalParams {
  double beta = 0.85;       // anticipation threshold, in [0, 1)
  double gamma_star = 1.0;  // modulation gain, >= 1
  double u_max = 0.8;       // control amplitude U [V]
  void validate() const;
};

/// Energy-saving variant: two thresholds create a mandatory u = 0 band.
struct EnergySavingParams {
  double beta1 = 0.85;             // outer threshold, beta2 < beta1 < 1
  double beta2 = 0.1;              // inner threshold, > -1
  double u_max = 0.8;              // control amplitude U [V]
  double disturbance_bound = 0.0;  // D, same units as u_max (caller converts)
  void validate() const;
};

enum class ControllerPhase { Initializing, Running };

/// Shared controller memory: the running extremum sigma_M plus the
/// slope-sign-change detector registers that maintain it.
struct ControllerState {
  double sigma_m = 0.0;      // last detected extremal sigma (init: sigma(0))
  double sigma0 = 0.0;       // sigma at t = 0, anchor of the initializing law
  double last_sigma = 0.0;   // previous-sample sigma
  double candidate = 0.0;    // peak-hold of the extremal candidate
  int last_dsigma_sign = 0;  // hysteresis-filtered sign of the sigma slope
  ControllerPhase phase = ControllerPhase::Initializing;

  void reset(double sigma_initial);
};

/// Relay on the quadratic surface: u = -U * sign(sigma).
double terminal_step(double sigma_value, double u_max);

/// u = -gamma*U*sign(sigma - beta*sigma_M), gamma = 1 when the switch argument
/// and sigma_M agree in sign, gamma_star otherwise.
double suboptimal_step(double sigma_value, const ControllerState& state,
                       const SubOptimalParams& params);

/// u = -U/2 * sign(sigma - beta1*sigma_M) - U/2 * sign(sigma - beta2*sigma_M);
/// output is 0 between the two thresholds.
double energy_saving_step(double sigma_value, const ControllerState& state,
                          const EnergySavingParams& params);

/// Start-up action -U * sign(sigma - sigma(0)), used until the first extremum:
/// it brakes whatever drift sigma has so the extremum arrives as early as possible.
double init_step(double sigma_value, const ControllerState& state, double u_max);

/// Slope-sign-change extremum detector with an absolute hysteresis band and
/// peak-hold of the extremal candidate. Between detections sigma_M is constant;
/// a detection updates sigma_M to the held candidate and (once) flips the phase
/// Initializing -> Running. Returns true when an extremum was detected.
bool update_extremum(double sigma_value, ControllerState& state, double hysteresis);

/// Smallest admissible modulation gain
/// max(1, (2D + (1-beta)K_M*U) / ((1+beta)K_m*U)); requires U > D/K_m.
double gamma_star_lower_bound(double beta, double d_bound, double u_max,
                              double k_min, double k_max);

struct FeasibilityResult {
  bool feasible = false;
  std::vector<std::string> violations;  // names of the inequalities that failed
};

/// Threshold feasibility triangle: beta1 + beta2 > 2D/U, 0 <= beta1 < 1,
/// -1 < beta2 < beta1. D and U must be given in consistent units.
FeasibilityResult feasibility_check(double beta1, double beta2, double d_bound,
                                    double u_max);

}  // namespace smbench

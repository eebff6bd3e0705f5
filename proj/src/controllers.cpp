#include "smbench/controllers.hpp"

#include <algorithm>
#include <cmath>

namespace smbench {

void SubOptimalParams::validate() const {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("suboptimal: beta must lie in [0, 1)");
  if (!(gamma_star >= 1.0))
    throw std::invalid_argument("suboptimal: gamma_star must be >= 1");
  if (!(u_max > 0.0)) throw std::invalid_argument("suboptimal: u_max must be positive");
}

void EnergySavingParams::validate() const {
  if (!(u_max > 0.0)) throw std::invalid_argument("energy_saving: u_max must be positive");
  if (!(disturbance_bound >= 0.0))
    throw std::invalid_argument("energy_saving: disturbance_bound must be >= 0");
  const FeasibilityResult r = feasibility_check(beta1, beta2, disturbance_bound, u_max);
  if (!r.feasible) {
    std::string msg = "energy_saving thresholds infeasible:";
    for (const auto& v : r.violations) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
}

void ControllerState::reset(double sigma_initial) {
  sigma_m = sigma_initial;
  sigma0 = sigma_initial;
  last_sigma = sigma_initial;
  candidate = sigma_initial;
  last_dsigma_sign = 0;
  phase = ControllerPhase::Initializing;
}

double terminal_step(double sigma_value, double u_max) {
  return -u_max * sign_of(sigma_value);
}

double suboptimal_step(double sigma_value, const ControllerState& state,
                       const SubOptimalParams& params) {
  const double arg = sigma_value - params.beta * state.sigma_m;
  const double gamma = (arg * state.sigma_m >= 0.0) ? 1.0 : params.gamma_star;
  return -gamma * params.u_max * sign_of(arg);
}

double energy_saving_step(double sigma_value, const ControllerState& state,
                          const EnergySavingParams& params) {
  const double half = 0.5 * params.u_max;
  return -half * sign_of(sigma_value - params.beta1 * state.sigma_m) -
         half * sign_of(sigma_value - params.beta2 * state.sigma_m);
}

double init_step(double sigma_value, const ControllerState& state, double u_max) {
  return -u_max * sign_of(sigma_value - state.sigma0);
}

bool update_extremum(double sigma_value, ControllerState& state, double hysteresis) {
  bool detected = false;
  if (state.last_dsigma_sign == 0) {
    // Direction unknown: wait until sigma leaves the initial value by more
    // than the hysteresis band, then start tracking that direction.
    if (sigma_value > state.candidate + hysteresis) {
      state.last_dsigma_sign = 1;
      state.candidate = sigma_value;
    } else if (sigma_value < state.candidate - hysteresis) {
      state.last_dsigma_sign = -1;
      state.candidate = sigma_value;
    }
  } else if (state.last_dsigma_sign > 0) {
    if (sigma_value >= state.candidate) {
      state.candidate = sigma_value;  // still rising: hold the peak
    } else if (state.candidate - sigma_value > hysteresis) {
      // Slope sign change confirmed beyond the band: maximum at the candidate.
      state.sigma_m = state.candidate;
      state.phase = ControllerPhase::Running;
      state.last_dsigma_sign = -1;
      state.candidate = sigma_value;
      detected = true;
    }
  } else {
    if (sigma_value <= state.candidate) {
      state.candidate = sigma_value;  // still falling: hold the trough
    } else if (sigma_value - state.candidate > hysteresis) {
      state.sigma_m = state.candidate;
      state.phase = ControllerPhase::Running;
      state.last_dsigma_sign = 1;
      state.candidate = sigma_value;
      detected = true;
    }
  }
  state.last_sigma = sigma_value;
  return detected;
}

double gamma_star_lower_bound(double beta, double d_bound, double u_max,
                              double k_min, double k_max) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("gamma_star_lower_bound: beta must lie in [0, 1)");
  if (!(d_bound >= 0.0))
    throw std::invalid_argument("gamma_star_lower_bound: D must be >= 0");
  if (!(k_min > 0.0 && k_max >= k_min))
    throw std::invalid_argument("gamma_star_lower_bound: need 0 < K_m <= K_M");
  if (!(u_max > d_bound / k_min))
    throw std::domain_error(
        "gamma_star_lower_bound: control authority too small (U <= D/K_m)");
  return std::max(1.0, (2.0 * d_bound + (1.0 - beta) * k_max * u_max) /
                           ((1.0 + beta) * k_min * u_max));
}

FeasibilityResult feasibility_check(double beta1, double beta2, double d_bound,
                                    double u_max) {
  if (!(u_max > 0.0)) throw std::invalid_argument("feasibility_check: U must be positive");
  if (!(d_bound >= 0.0)) throw std::invalid_argument("feasibility_check: D must be >= 0");
  FeasibilityResult r;
  if (!(beta1 + beta2 > 2.0 * d_bound / u_max))
    r.violations.push_back("beta1 + beta2 > 2D/U");
  if (!(beta1 >= 0.0)) r.violations.push_back("beta1 >= 0");
  if (!(beta1 < 1.0)) r.violations.push_back("beta1 < 1");
  if (!(beta2 > -1.0)) r.violations.push_back("beta2 > -1");
  if (!(beta2 < beta1)) r.violations.push_back("beta2 < beta1");
  r.feasible = r.violations.empty();
  return r;
}

}  // namespace smbench

#pragma once

#include <cstdint>

#include "smbench/common.hpp"

namespace smbench {

/// Voice-coil positioning stage: m*x'' = v + G_net + d with first-order
/// actuator lag tau*v' = K*u - v. The constant gravity force and its voltage
/// compensation both live in the plant as G_net = G - K*u_gr.
struct PlantParams {
  double mass = 0.538;              // m [kg]
  double input_gain = 3.28;         // K [N/V]
  double gravity = 5.27;            // G [N]
  double actuator_tau = 0.0012;     // lag time constant mu [s]
  double disturbance_bound = 1.0;   // D [N], |d| <= D at all times
  double sensor_noise_std = 4.58e-5;  // position sensor noise std [m]
  double gravity_comp = 1.61;       // u_gr [V], K*u_gr ~= G

  double net_gravity() const { return gravity - input_gain * gravity_comp; }
  void validate() const;
};

enum class DisturbanceKind { None, Constant, Cogging, RandomBounded, Mixed, Adversarial };

/// Disturbance generator. `bound` clamps the total of every kind to D;
/// Mixed sums the cogging and random components (the benchmark default);
/// Adversarial opposes the applied switching control at full bound.
struct DisturbanceModel {
  DisturbanceKind kind = DisturbanceKind::None;
  double constant_bias = 0.0;        // Constant kind [N]
  double cogging_amplitude = 0.0;    // [N]
  double cogging_period = 0.005;     // spatial period [m]
  double random_bound = 0.0;         // random component clamp [N]
  double random_bandwidth_hz = 50.0; // low-pass bandwidth of the random part
  double bound = 1.0;                // total clamp D [N]
  std::uint64_t seed = 0;            // 0 = derive from the run seed

  /// Cogging(0.6 N, 5 mm) + RandomBounded(0.4 N, 50 Hz), total clamped to D.
  static DisturbanceModel benchmark_default(double total_bound);
  void validate() const;
};

/// Filter state + draw counter of the random component.
struct DisturbanceState {
  double filtered = 0.0;
  std::uint64_t counter = 0;
};

struct PlantState {
  double x = 0.0;   // position [m]
  double xd = 0.0;  // velocity [m/s]
  double v = 0.0;   // actuator lag state [N]
  DisturbanceState dist;
};

/// Advance the stochastic disturbance component once per control period.
/// Deterministic for a given (model.seed, state.counter) pair.
void advance_disturbance(const DisturbanceModel& model, DisturbanceState& state,
                         double dt);

/// Evaluate the disturbance force at position x with switching control u
/// applied. Pure: safe to call at integrator stage points.
double disturbance_eval(const DisturbanceModel& model, const DisturbanceState& state,
                        double x, double u);

/// One control period under zero-order-hold switching control u:
/// the actuator lag advances by its exact exponential solution and the
/// mechanical states by classical 4-stage explicit substeps with the lag
/// evaluated exactly at the stage times. Throws SimulationFault when the
/// state leaves the finite range. advance_disturbance() is the caller's job.
PlantState plant_step(const PlantState& state, double u, const PlantParams& params,
                      const DisturbanceModel& model, double dt, int substeps = 4);

/// Measured position: x plus one zero-mean normal draw from the stream.
double measure(const PlantState& state, const PlantParams& params, NoiseStream& stream);

}  // namespace smbench

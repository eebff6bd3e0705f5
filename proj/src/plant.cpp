#include "smbench/plant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace smbench {

void PlantParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(mass)) throw std::invalid_argument("plant: mass must be positive");
  if (!positive(input_gain)) throw std::invalid_argument("plant: input_gain must be positive");
  if (!positive(actuator_tau))
    throw std::invalid_argument("plant: actuator_tau must be positive");
  if (!(std::isfinite(disturbance_bound) && disturbance_bound >= 0.0))
    throw std::invalid_argument("plant: disturbance_bound must be >= 0");
  if (!(std::isfinite(sensor_noise_std) && sensor_noise_std >= 0.0))
    throw std::invalid_argument("plant: sensor_noise_std must be >= 0");
  if (!std::isfinite(gravity) || !std::isfinite(gravity_comp))
    throw std::invalid_argument("plant: gravity terms must be finite");
}

DisturbanceModel DisturbanceModel::benchmark_default(double total_bound) {
  DisturbanceModel m;
  m.kind = DisturbanceKind::Mixed;
  m.cogging_amplitude = 0.6;
  m.cogging_period = 0.005;
  m.random_bound = 0.4;
  m.random_bandwidth_hz = 50.0;
  m.bound = total_bound;
  return m;
}

void DisturbanceModel::validate() const {
  if (!(bound >= 0.0)) throw std::invalid_argument("disturbance: bound must be >= 0");
  const bool uses_cogging =
      kind == DisturbanceKind::Cogging || kind == DisturbanceKind::Mixed;
  if (uses_cogging && !(cogging_period > 0.0))
    throw std::invalid_argument("disturbance: cogging_period must be positive");
  const bool uses_random =
      kind == DisturbanceKind::RandomBounded || kind == DisturbanceKind::Mixed;
  if (uses_random && !(random_bound >= 0.0 && random_bandwidth_hz > 0.0))
    throw std::invalid_argument("disturbance: random component needs bound >= 0, bandwidth > 0");
}

void advance_disturbance(const DisturbanceModel& model, DisturbanceState& state,
                         double dt) {
  const bool uses_random = model.kind == DisturbanceKind::RandomBounded ||
                           model.kind == DisturbanceKind::Mixed;
  if (!uses_random) return;
  // First-order low-pass driven by unit normals, scaled so the stationary
  // deviation is half the component bound (the clamp handles the tails).
  const double a = 1.0 - std::exp(-2.0 * std::numbers::pi * model.random_bandwidth_hz * dt);
  const double scale = 0.5 * model.random_bound * std::sqrt((2.0 - a) / a);
  const double g = NoiseStream::gaussian_at(model.seed, state.counter++);
  state.filtered += a * (scale * g - state.filtered);
}

namespace {

double random_component(const DisturbanceModel& m, const DisturbanceState& s) {
  return std::clamp(s.filtered, -m.random_bound, m.random_bound);
}

double cogging_component(const DisturbanceModel& m, double x) {
  return m.cogging_amplitude *
         std::sin(2.0 * std::numbers::pi * x / m.cogging_period);
}

}  // namespace

double disturbance_eval(const DisturbanceModel& model, const DisturbanceState& state,
                        double x, double u) {
  double d = 0.0;
  switch (model.kind) {
    case DisturbanceKind::None:
      return 0.0;
    case DisturbanceKind::Constant:
      d = model.constant_bias;
      break;
    case DisturbanceKind::Cogging:
      d = cogging_component(model, x);
      break;
    case DisturbanceKind::RandomBounded:
      d = random_component(model, state);
      break;
    case DisturbanceKind::Mixed:
      d = model.constant_bias + cogging_component(model, x) + random_component(model, state);
      break;
    case DisturbanceKind::Adversarial:
      d = -model.bound * sign_of(u);
      break;
  }
  return std::clamp(d, -model.bound, model.bound);
}

PlantState plant_step(const PlantState& state, double u, const PlantParams& params,
                      const DisturbanceModel& model, double dt, int substeps) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("plant_step: dt must be positive");
  if (substeps < 1) throw std::invalid_argument("plant_step: substeps must be >= 1");
  if (!std::isfinite(u)) throw std::invalid_argument("plant_step: non-finite control input");

  const double g_net = params.net_gravity();
  const double ku = params.input_gain * u;
  const double tau = params.actuator_tau;
  const double v0 = state.v;
  const double h = dt / substeps;

  // Lag under zero-order-hold u, exact at any offset into the period.
  auto v_at = [&](double t) { return ku + (v0 - ku) * std::exp(-t / tau); };
  auto accel = [&](double t, double x) {
    return (v_at(t) + g_net + disturbance_eval(model, state.dist, x, u)) / params.mass;
  };

  PlantState out = state;
  for (int i = 0; i < substeps; ++i) {
    const double t0 = i * h;
    const double k1x = out.xd;
    const double k1v = accel(t0, out.x);
    const double k2x = out.xd + 0.5 * h * k1v;
    const double k2v = accel(t0 + 0.5 * h, out.x + 0.5 * h * k1x);
    const double k3x = out.xd + 0.5 * h * k2v;
    const double k3v = accel(t0 + 0.5 * h, out.x + 0.5 * h * k2x);
    const double k4x = out.xd + h * k3v;
    const double k4v = accel(t0 + h, out.x + h * k3x);
    out.x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    out.xd += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }
  out.v = v_at(dt);

  if (!std::isfinite(out.x) || !std::isfinite(out.xd) || !std::isfinite(out.v))
    throw SimulationFault("plant_step: state diverged (non-finite)");
  return out;
}

double measure(const PlantState& state, const PlantParams& params, NoiseStream& stream) {
  // Always draw so the stream position is independent of the noise level.
  return state.x + params.sensor_noise_std * stream.gaussian();
}

}  // namespace smbench

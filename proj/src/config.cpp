#include "smbench/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace smbench {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path + " must be a number");
  return j.get<double>();
}

std::uint64_t as_seed(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) fail(path + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0) fail(path + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path + " must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path + " must be a string");
  return j.get<std::string>();
}

void check_keys(const json& obj, const std::string& section,
                const std::set<std::string>& known) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!known.count(key))
      fail("unknown key '" + (section.empty() ? key : section + "." + key) + "'");
  }
}

ControllerKind parse_kind(const std::string& s, const std::string& path) {
  if (s == "terminal") return ControllerKind::Terminal;
  if (s == "suboptimal") return ControllerKind::SubOptimal;
  if (s == "energy_saving") return ControllerKind::EnergySaving;
  fail(path + " must be one of terminal|suboptimal|energy_saving (got '" + s + "')");
}

DisturbanceKind parse_disturbance_kind(const std::string& s, const std::string& path) {
  if (s == "none") return DisturbanceKind::None;
  if (s == "constant") return DisturbanceKind::Constant;
  if (s == "cogging") return DisturbanceKind::Cogging;
  if (s == "random") return DisturbanceKind::RandomBounded;
  if (s == "mixed") return DisturbanceKind::Mixed;
  if (s == "adversarial") return DisturbanceKind::Adversarial;
  fail(path + " must be one of none|constant|cogging|random|mixed|adversarial (got '" +
       s + "')");
}

void parse_plant(const json& j, PlantParams& p) {
  check_keys(j, "plant",
             {"mass", "input_gain", "gravity", "actuator_tau", "disturbance_bound",
              "sensor_noise_std", "gravity_comp"});
  if (j.contains("mass")) p.mass = as_number(j["mass"], "plant.mass");
  if (j.contains("input_gain")) p.input_gain = as_number(j["input_gain"], "plant.input_gain");
  if (j.contains("gravity")) p.gravity = as_number(j["gravity"], "plant.gravity");
  if (j.contains("actuator_tau"))
    p.actuator_tau = as_number(j["actuator_tau"], "plant.actuator_tau");
  if (j.contains("disturbance_bound"))
    p.disturbance_bound = as_number(j["disturbance_bound"], "plant.disturbance_bound");
  if (j.contains("sensor_noise_std"))
    p.sensor_noise_std = as_number(j["sensor_noise_std"], "plant.sensor_noise_std");
  if (j.contains("gravity_comp"))
    p.gravity_comp = as_number(j["gravity_comp"], "plant.gravity_comp");
}

void parse_controller(const json& j, const std::string& section, ControllerConfig& c) {
  check_keys(j, section,
             {"type", "u_max", "alpha", "beta", "gamma_star", "beta1", "beta2",
              "hysteresis"});
  if (j.contains("type")) c.kind = parse_kind(as_string(j["type"], section + ".type"),
                                              section + ".type");
  if (j.contains("u_max")) c.u_max = as_number(j["u_max"], section + ".u_max");
  if (j.contains("alpha")) c.alpha = as_number(j["alpha"], section + ".alpha");
  if (j.contains("beta")) c.suboptimal.beta = as_number(j["beta"], section + ".beta");
  if (j.contains("gamma_star"))
    c.suboptimal.gamma_star = as_number(j["gamma_star"], section + ".gamma_star");
  if (j.contains("beta1"))
    c.energy_saving.beta1 = as_number(j["beta1"], section + ".beta1");
  if (j.contains("beta2"))
    c.energy_saving.beta2 = as_number(j["beta2"], section + ".beta2");
  if (j.contains("hysteresis"))
    c.hysteresis = as_number(j["hysteresis"], section + ".hysteresis");
}

void parse_simulation(const json& j, SimConfig& s) {
  check_keys(j, "simulation",
             {"dt_control", "substeps", "duration", "reference", "initial_position",
              "seed", "tolerance_band", "dwell", "lpf_cutoff_hz", "lpf_substeps"});
  if (j.contains("dt_control"))
    s.dt_control = as_number(j["dt_control"], "simulation.dt_control");
  if (j.contains("substeps")) s.substeps = as_int(j["substeps"], "simulation.substeps");
  if (j.contains("duration")) s.duration = as_number(j["duration"], "simulation.duration");
  if (j.contains("reference"))
    s.reference = as_number(j["reference"], "simulation.reference");
  if (j.contains("initial_position"))
    s.initial_position = as_number(j["initial_position"], "simulation.initial_position");
  if (j.contains("seed")) s.seed = as_seed(j["seed"], "simulation.seed");
  if (j.contains("tolerance_band"))
    s.tolerance_band = as_number(j["tolerance_band"], "simulation.tolerance_band");
  if (j.contains("dwell")) s.dwell = as_number(j["dwell"], "simulation.dwell");
  if (j.contains("lpf_cutoff_hz"))
    s.lpf.cutoff_hz = as_number(j["lpf_cutoff_hz"], "simulation.lpf_cutoff_hz");
  if (j.contains("lpf_substeps"))
    s.lpf.substeps = as_int(j["lpf_substeps"], "simulation.lpf_substeps");
}

void parse_disturbance(const json& j, DisturbanceModel& d) {
  check_keys(j, "disturbance",
             {"kind", "constant_bias", "cogging_amplitude", "cogging_period",
              "random_bound", "random_bandwidth_hz", "seed"});
  if (j.contains("kind"))
    d.kind = parse_disturbance_kind(as_string(j["kind"], "disturbance.kind"),
                                    "disturbance.kind");
  if (j.contains("constant_bias"))
    d.constant_bias = as_number(j["constant_bias"], "disturbance.constant_bias");
  if (j.contains("cogging_amplitude"))
    d.cogging_amplitude = as_number(j["cogging_amplitude"], "disturbance.cogging_amplitude");
  if (j.contains("cogging_period"))
    d.cogging_period = as_number(j["cogging_period"], "disturbance.cogging_period");
  if (j.contains("random_bound"))
    d.random_bound = as_number(j["random_bound"], "disturbance.random_bound");
  if (j.contains("random_bandwidth_hz"))
    d.random_bandwidth_hz =
        as_number(j["random_bandwidth_hz"], "disturbance.random_bandwidth_hz");
  if (j.contains("seed")) d.seed = as_seed(j["seed"], "disturbance.seed");
}

void parse_output(const json& j, LoadedConfig& c) {
  check_keys(j, "output", {"run_id", "directory"});
  if (j.contains("run_id")) c.run_id = as_string(j["run_id"], "output.run_id");
  if (j.contains("directory")) c.out_dir = as_string(j["directory"], "output.directory");
}

void apply_override(json& root, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    fail("override must look like section.key=value (got '" + spec + "')");
  const std::string path = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);

  json* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string part = path.substr(start, dot - start);
    if (part.empty()) fail("override has an empty path segment: '" + spec + "'");
    if (dot == std::string::npos) {
      json parsed = json::parse(value, nullptr, false);
      (*node)[part] = parsed.is_discarded() ? json(value) : parsed;
      return;
    }
    node = &(*node)[part];
    start = dot + 1;
  }
}

LoadedConfig from_json(const json& root) {
  if (!root.is_object()) fail("top level must be an object");
  check_keys(root, "",
             {"plant", "controller", "controller_b", "simulation", "disturbance",
              "output"});
  LoadedConfig cfg;
  cfg.sim.disturbance = DisturbanceModel::benchmark_default(cfg.sim.plant.disturbance_bound);
  if (root.contains("plant")) parse_plant(root["plant"], cfg.sim.plant);
  if (root.contains("controller"))
    parse_controller(root["controller"], "controller", cfg.sim.controller);
  if (root.contains("controller_b")) {
    ControllerConfig b = cfg.sim.controller;  // inherit shared surface/u_max defaults
    parse_controller(root["controller_b"], "controller_b", b);
    cfg.controller_b = b;
  }
  if (root.contains("simulation")) parse_simulation(root["simulation"], cfg.sim);
  if (root.contains("disturbance")) parse_disturbance(root["disturbance"], cfg.sim.disturbance);
  // Keep the total clamp tied to the plant's declared bound.
  cfg.sim.disturbance.bound = cfg.sim.plant.disturbance_bound;
  if (root.contains("output")) parse_output(root["output"], cfg);
  if (cfg.controller_b) {
    if (cfg.controller_b->u_max != cfg.sim.controller.u_max)
      fail("controller_b.u_max must match controller.u_max (shared authority)");
    if (cfg.controller_b->alpha != cfg.sim.controller.alpha)
      fail("controller_b.alpha must match controller.alpha (shared surface)");
  }
  cfg.sim.validate();
  if (cfg.controller_b) {
    SimConfig check = cfg.sim;
    check.controller = *cfg.controller_b;
    check.validate();
  }
  return cfg;
}

}  // namespace

LoadedConfig parse_config(const std::string& json_text,
                          const std::vector<std::string>& overrides) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) fail("malformed JSON");
  for (const auto& o : overrides) apply_override(root, o);
  return from_json(root);
}

LoadedConfig load_config(const std::string& path,
                         const std::vector<std::string>& overrides) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("config not found: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), overrides);
}

std::string config_to_json(const LoadedConfig& config) {
  const SimConfig& s = config.sim;
  auto controller_json = [](const ControllerConfig& c) {
    return json{{"type", controller_name(c.kind)},
                {"u_max", c.u_max},
                {"alpha", c.alpha},
                {"beta", c.suboptimal.beta},
                {"gamma_star", c.suboptimal.gamma_star},
                {"beta1", c.energy_saving.beta1},
                {"beta2", c.energy_saving.beta2},
                {"hysteresis", c.hysteresis}};
  };
  std::string dist_kind;
  switch (s.disturbance.kind) {
    case DisturbanceKind::None: dist_kind = "none"; break;
    case DisturbanceKind::Constant: dist_kind = "constant"; break;
    case DisturbanceKind::Cogging: dist_kind = "cogging"; break;
    case DisturbanceKind::RandomBounded: dist_kind = "random"; break;
    case DisturbanceKind::Mixed: dist_kind = "mixed"; break;
    case DisturbanceKind::Adversarial: dist_kind = "adversarial"; break;
  }
  json root{
      {"plant",
       {{"mass", s.plant.mass},
        {"input_gain", s.plant.input_gain},
        {"gravity", s.plant.gravity},
        {"actuator_tau", s.plant.actuator_tau},
        {"disturbance_bound", s.plant.disturbance_bound},
        {"sensor_noise_std", s.plant.sensor_noise_std},
        {"gravity_comp", s.plant.gravity_comp}}},
      {"controller", controller_json(s.controller)},
      {"simulation",
       {{"dt_control", s.dt_control},
        {"substeps", s.substeps},
        {"duration", s.duration},
        {"reference", s.reference},
        {"initial_position", s.initial_position},
        {"seed", s.seed},
        {"tolerance_band", s.tolerance_band},
        {"dwell", s.dwell},
        {"lpf_cutoff_hz", s.lpf.cutoff_hz},
        {"lpf_substeps", s.lpf.substeps}}},
      {"disturbance",
       {{"kind", dist_kind},
        {"constant_bias", s.disturbance.constant_bias},
        {"cogging_amplitude", s.disturbance.cogging_amplitude},
        {"cogging_period", s.disturbance.cogging_period},
        {"random_bound", s.disturbance.random_bound},
        {"random_bandwidth_hz", s.disturbance.random_bandwidth_hz},
        {"seed", s.disturbance.seed}}},
      {"output", {{"run_id", config.run_id}, {"directory", config.out_dir}}}};
  if (config.controller_b) root["controller_b"] = controller_json(*config.controller_b);
  return root.dump(2) + "\n";
}

}  // namespace smbench

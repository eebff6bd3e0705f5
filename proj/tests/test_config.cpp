#include <stdexcept>
#include <string>

#include "doctest.h"
#include "smbench/config.hpp"

using namespace smbench;

TEST_CASE("config: empty document yields the benchmark defaults") {
  const LoadedConfig c = parse_config("{}");
  CHECK(c.sim.controller.kind == ControllerKind::Terminal);
  CHECK(c.sim.duration == 1.5);
  CHECK(c.sim.reference == 0.015);
  CHECK(c.sim.seed == 1);
  CHECK(c.sim.plant.mass == 0.538);
  CHECK(c.sim.disturbance.kind == DisturbanceKind::Mixed);
  CHECK(c.sim.disturbance.bound == 1.0);
  CHECK(c.sim.disturbance.cogging_amplitude == 0.6);
  CHECK(c.sim.disturbance.random_bound == 0.4);
  CHECK(c.run_id == "run");
  CHECK(c.out_dir.empty());
  CHECK_FALSE(c.controller_b.has_value());
}

TEST_CASE("config: sections override their fields") {
  const char* text = R"({
    "plant": {"mass": 0.6, "disturbance_bound": 0.5},
    "controller": {"type": "energy_saving", "beta1": 0.8, "beta2": 0.2,
                   "hysteresis": 1e-4},
    "simulation": {"duration": 0.7, "dwell": 0.1, "seed": 12,
                   "initial_position": -0.015},
    "disturbance": {"kind": "adversarial"},
    "output": {"run_id": "exp1", "directory": "results"}
  })";
  const LoadedConfig c = parse_config(text);
  CHECK(c.sim.plant.mass == 0.6);
  CHECK(c.sim.controller.kind == ControllerKind::EnergySaving);
  CHECK(c.sim.controller.energy_saving.beta1 == 0.8);
  CHECK(c.sim.controller.energy_saving.beta2 == 0.2);
  CHECK(c.sim.controller.hysteresis == 1e-4);
  CHECK(c.sim.duration == 0.7);
  CHECK(c.sim.seed == 12);
  CHECK(c.sim.initial_position == -0.015);
  CHECK(c.sim.disturbance.kind == DisturbanceKind::Adversarial);
  // The total disturbance clamp always follows the plant's declared bound.
  CHECK(c.sim.disturbance.bound == 0.5);
  CHECK(c.run_id == "exp1");
  CHECK(c.out_dir == "results");
}

TEST_CASE("config: unknown keys are rejected with their dotted path") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"bogus": 1})"),
                       doctest::Contains("unknown key 'bogus'"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"plant": {"massx": 1}})"),
                       doctest::Contains("unknown key 'plant.massx'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"simulation": {"Seed": 3}})"),
                       doctest::Contains("unknown key 'simulation.Seed'"),
                       std::invalid_argument);
}

TEST_CASE("config: wrong value types name the offending field") {
  CHECK_THROWS_WITH_AS(parse_config(R"({"plant": {"mass": "heavy"}})"),
                       doctest::Contains("plant.mass must be a number"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"simulation": {"seed": -1}})"),
                       doctest::Contains("must be non-negative"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"simulation": {"seed": 1.5}})"),
                       doctest::Contains("must be an integer"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"controller": {"type": "pid"}})"),
                       doctest::Contains("terminal|suboptimal|energy_saving"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"disturbance": {"kind": "gusty"}})"),
                       doctest::Contains("none|constant|cogging|random|mixed|adversarial"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config(R"({"output": {"run_id": 7}})"),
                       doctest::Contains("output.run_id must be a string"),
                       std::invalid_argument);
}

TEST_CASE("config: malformed documents and missing files fail distinctly") {
  CHECK_THROWS_WITH_AS(parse_config("{"), doctest::Contains("malformed JSON"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(load_config("/no/such/dir/missing.json"),
                       doctest::Contains("config not found"), std::invalid_argument);
}

TEST_CASE("config: overrides apply after the file and nest by dotted path") {
  const LoadedConfig c =
      parse_config(R"({"simulation": {"seed": 3}})",
                   {"simulation.seed=7", "controller.type=energy_saving",
                    "plant.mass=0.7"});
  CHECK(c.sim.seed == 7);
  CHECK(c.sim.controller.kind == ControllerKind::EnergySaving);
  CHECK(c.sim.plant.mass == 0.7);
}

TEST_CASE("config: disjoint overrides commute, repeated overrides last-write-win") {
  const std::string text = "{}";
  const LoadedConfig ab = parse_config(text, {"simulation.seed=4", "plant.mass=0.9"});
  const LoadedConfig ba = parse_config(text, {"plant.mass=0.9", "simulation.seed=4"});
  CHECK(config_to_json(ab) == config_to_json(ba));
  const LoadedConfig last =
      parse_config(text, {"simulation.seed=4", "simulation.seed=9"});
  CHECK(last.sim.seed == 9);
}

TEST_CASE("config: override values fall back to strings when not valid JSON") {
  const LoadedConfig c = parse_config("{}", {"output.run_id=trial_b"});
  CHECK(c.run_id == "trial_b");
}

TEST_CASE("config: overrides cannot invent keys") {
  CHECK_THROWS_WITH_AS(parse_config("{}", {"plant.bogus=1"}),
                       doctest::Contains("unknown key 'plant.bogus'"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_config("{}", {"no_equals_here"}),
                       doctest::Contains("override must look like"),
                       std::invalid_argument);
}

TEST_CASE("config: second controller inherits the shared surface and authority") {
  const char* text = R"({
    "controller": {"type": "terminal", "u_max": 0.8, "alpha": 1.2},
    "controller_b": {"type": "energy_saving", "beta1": 0.85, "beta2": 0.1}
  })";
  const LoadedConfig c = parse_config(text);
  REQUIRE(c.controller_b.has_value());
  CHECK(c.controller_b->kind == ControllerKind::EnergySaving);
  CHECK(c.controller_b->u_max == 0.8);
  CHECK(c.controller_b->alpha == 1.2);
}

TEST_CASE("config: second controller may not diverge on shared quantities") {
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"controller_b": {"type": "energy_saving", "u_max": 0.9}})"),
      doctest::Contains("shared authority"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"controller_b": {"type": "energy_saving", "alpha": 1.0}})"),
      doctest::Contains("shared surface"), std::invalid_argument);
}

TEST_CASE("config: infeasible thresholds surface the violated inequality") {
  CHECK_THROWS_WITH_AS(
      parse_config(
          R"({"controller": {"type": "energy_saving", "beta1": 0.5, "beta2": 0.5}})"),
      doctest::Contains("beta2 < beta1"), std::invalid_argument);
}

TEST_CASE("config: serialization round-trips to a fixed point") {
  const char* text = R"({
    "controller": {"type": "energy_saving", "beta1": 0.85, "beta2": 0.1},
    "controller_b": {"type": "terminal"},
    "simulation": {"duration": 0.9, "dwell": 0.15, "initial_position": 0.001},
    "disturbance": {"kind": "random", "random_bound": 0.3},
    "output": {"run_id": "rt"}
  })";
  const LoadedConfig c1 = parse_config(text);
  const std::string s1 = config_to_json(c1);
  const LoadedConfig c2 = parse_config(s1);
  const std::string s2 = config_to_json(c2);
  CHECK(s1 == s2);
  CHECK(c2.sim.duration == c1.sim.duration);
  CHECK(c2.sim.initial_position == c1.sim.initial_position);
  CHECK(c2.sim.controller.energy_saving.beta1 == c1.sim.controller.energy_saving.beta1);
  CHECK(c2.sim.disturbance.kind == c1.sim.disturbance.kind);
  CHECK(c2.run_id == c1.run_id);
  REQUIRE(c2.controller_b.has_value());
  CHECK(c2.controller_b->kind == ControllerKind::Terminal);
  CHECK(s1.find("initial_position") != std::string::npos);
}

TEST_CASE("config: validation faults from the assembled run are config faults too") {
  // An authority deficit is only visible once plant and controller are joined.
  CHECK_THROWS_WITH_AS(
      parse_config(R"({"plant": {"disturbance_bound": 3.0}})"),
      doctest::Contains("authority"), std::invalid_argument);
}

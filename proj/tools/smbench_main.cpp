// smbench: command-line front end for the sliding-mode benchmarking toolkit.
//
// Subcommands:
//   simulate   run one closed-loop simulation, write trace + summary
//   benchmark  run two controllers on the identical plant/noise, write report
//   chatter    print the harmonic-balance oscillation prediction
//   tune       grid-search switching thresholds under a convergence constraint
//
// Exit codes: 0 success/converged, 2 ran-but-did-not-converge, 1 fatal error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "smbench/analysis.hpp"
#include "smbench/config.hpp"
#include "smbench/engine.hpp"

namespace fs = std::filesystem;
using namespace smbench;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFatal = 1;
constexpr int kExitNotConverged = 2;

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Run configuration file (JSON)")
      ->required();
  cmd->add_option("--set", args.overrides,
                  "Override a config value, section.key=value (repeatable)");
  cmd->add_option("--out-dir", args.out_dir,
                  "Output directory (default: config output.directory, then "
                  "$SMBENCH_OUT_DIR, then '.')");
  cmd->add_option("--seed", args.seed, "Override simulation.seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
}

LoadedConfig load_from_args(const CommonArgs& args) {
  std::vector<std::string> overrides = args.overrides;
  if (args.seed_set)
    overrides.push_back("simulation.seed=" + std::to_string(args.seed));
  return load_config(args.config_path, overrides);
}

fs::path resolve_out_dir(const CommonArgs& args, const LoadedConfig& cfg) {
  std::string dir = args.out_dir;
  if (dir.empty()) dir = cfg.out_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv("SMBENCH_OUT_DIR"); env && *env) dir = env;
  }
  if (dir.empty()) dir = ".";
  fs::create_directories(dir);
  return dir;
}

void warn_if_twisting(const SimConfig& sim) {
  if (sim.surface().twisting_mode())
    std::cerr << "warning: alpha <= 0.5 puts the closed loop in the twisting "
                 "regime; the switching laws here assume alpha > 0.5\n";
}

void print_run_line(const std::string& label, const RunSummary& s) {
  std::cout << label << ": converged=" << (s.converged ? "yes" : "no")
            << " convergence_time_s=" << format_value(s.convergence_time)
            << " energy_Vs=" << format_value(s.energy)
            << " steady_state_error_m=" << format_value(s.steady_state_error)
            << "\n";
}

int cmd_simulate(const CommonArgs& args) {
  const LoadedConfig cfg = load_from_args(args);
  const fs::path out = resolve_out_dir(args, cfg);
  warn_if_twisting(cfg.sim);

  const RunResult result = run(cfg.sim);

  const fs::path trace_path = out / (cfg.run_id + ".trace.csv");
  const fs::path summary_path = out / (cfg.run_id + ".summary");
  write_trace_csv(result.trace, trace_path.string());
  write_summary_file(result.summary, cfg.sim, summary_path.string());

  std::cout << "controller: " << controller_name(cfg.sim.controller.kind)
            << "  seed: " << cfg.sim.seed << "\n";
  print_run_line("run", result.summary);
  std::cout << "wrote: " << trace_path.string() << "\n"
            << "wrote: " << summary_path.string() << "\n";
  return result.summary.converged ? kExitOk : kExitNotConverged;
}

int cmd_benchmark(const CommonArgs& args) {
  const LoadedConfig cfg = load_from_args(args);
  if (!cfg.controller_b)
    throw std::invalid_argument(
        "config: benchmark needs a controller_b section naming the second "
        "controller");
  const fs::path out = resolve_out_dir(args, cfg);

  SimConfig sim_a = cfg.sim;
  SimConfig sim_b = cfg.sim;
  sim_b.controller = *cfg.controller_b;
  warn_if_twisting(sim_a);

  const RunResult a = run(sim_a);
  const RunResult b = run(sim_b);
  const CompareReport report = compare_runs(a, b, cfg.sim.dwell);

  // Harmonic-balance prediction applies to the relay-through-lag laws; prefer
  // the energy-saving side if present, otherwise a sub-optimal side.
  std::optional<ChatteringPrediction> prediction;
  auto predict_for = [&](const ControllerConfig& c) -> std::optional<ChatteringPrediction> {
    const double mu = cfg.sim.plant.actuator_tau;
    if (c.kind == ControllerKind::EnergySaving)
      return predict_chattering(mu, c.energy_saving.beta1, c.energy_saving.beta2);
    if (c.kind == ControllerKind::SubOptimal)
      return predict_chattering(mu, c.suboptimal.beta, c.suboptimal.beta);
    return std::nullopt;
  };
  prediction = predict_for(sim_b.controller);
  if (!prediction) prediction = predict_for(sim_a.controller);

  const std::string id = cfg.run_id;
  const fs::path trace_a = out / (id + "_a.trace.csv");
  const fs::path trace_b = out / (id + "_b.trace.csv");
  write_trace_csv(a.trace, trace_a.string());
  write_trace_csv(b.trace, trace_b.string());
  write_summary_file(a.summary, sim_a, (out / (id + "_a.summary")).string());
  write_summary_file(b.summary, sim_b, (out / (id + "_b.summary")).string());
  write_compare_csv(report, (out / (id + ".compare.csv")).string());
  write_compare_report(report, prediction, cfg.sim.plant.sensor_noise_std,
                       (out / (id + ".report")).string());

  std::cout << "a: " << controller_name(sim_a.controller.kind)
            << "  b: " << controller_name(sim_b.controller.kind)
            << "  seed: " << cfg.sim.seed << "\n";
  print_run_line("a", a.summary);
  print_run_line("b", b.summary);
  std::cout << "delta_energy_Vs (a-b) = " << format_value(report.delta_energy)
            << "\n";
  for (const auto& p : {trace_a, trace_b, out / (id + ".compare.csv"),
                        out / (id + ".report")})
    std::cout << "wrote: " << p.string() << "\n";
  return (a.summary.converged && b.summary.converged) ? kExitOk
                                                      : kExitNotConverged;
}

int cmd_chatter(double mu, double beta1, double beta2) {
  const ChatteringPrediction p = predict_chattering(mu, beta1, beta2);
  std::cout << "mu_s = " << format_value(mu) << "\n"
            << "beta1 = " << format_value(beta1) << "\n"
            << "beta2 = " << format_value(beta2) << "\n"
            << "predicted_omega_rad_s = " << format_value(p.omega) << "\n"
            << "predicted_frequency_hz = "
            << format_value(p.omega / (2.0 * 3.14159265358979323846)) << "\n"
            << "predicted_amplitude_sigma_m = " << format_value(p.amplitude_sigma)
            << "\n"
            << "predicted_amplitude_x_m = " << format_value(p.amplitude_x) << "\n";
  return kExitOk;
}

int cmd_tune(const CommonArgs& args, int grid, std::optional<double> beta1_fixed,
             double slack) {
  const LoadedConfig cfg = load_from_args(args);
  const fs::path out = resolve_out_dir(args, cfg);

  const double d_bound = cfg.sim.plant.disturbance_bound;
  const double u_equiv = cfg.sim.plant.input_gain * cfg.sim.controller.u_max;
  const TuningResult result =
      tune_thresholds(d_bound, u_equiv, beta1_fixed, grid, cfg.sim, slack);

  const fs::path grid_path = out / (cfg.run_id + ".grid.csv");
  const fs::path summary_path = out / (cfg.run_id + ".tuning");
  write_grid_csv(result, grid_path.string());
  write_tuning_summary(result, slack, summary_path.string());

  if (result.found) {
    std::cout << "best: beta1 = " << format_value(result.beta1)
              << "  beta2 = " << format_value(result.beta2)
              << "  J_emp_s = " << format_value(result.j_emp)
              << "  J_baseline_s = " << format_value(result.j_baseline)
              << "  energy_Vs = " << format_value(result.energy) << "\n";
  } else {
    std::cout << "no feasible cell satisfied the convergence constraint\n";
  }
  std::cout << "wrote: " << grid_path.string() << "\n"
            << "wrote: " << summary_path.string() << "\n";
  return result.found ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "smbench: second-order sliding-mode controller benchmarking toolkit"};
  app.require_subcommand(1);

  CommonArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run one closed-loop simulation and write trace + summary");
  add_common_options(simulate, sim_args);

  CommonArgs bench_args;
  CLI::App* benchmark = app.add_subcommand(
      "benchmark",
      "Run controller and controller_b on the identical plant and compare");
  add_common_options(benchmark, bench_args);

  double mu = 0.0012, c_beta1 = 0.85, c_beta2 = 0.1;
  CLI::App* chatter = app.add_subcommand(
      "chatter", "Print the harmonic-balance chattering prediction");
  chatter->add_option("--mu", mu, "Actuator time constant [s]")
      ->capture_default_str();
  chatter->add_option("--beta1", c_beta1, "Upper switching threshold factor")
      ->capture_default_str();
  chatter->add_option("--beta2", c_beta2, "Lower switching threshold factor")
      ->capture_default_str();

  CommonArgs tune_args;
  int grid = 21;
  double tune_beta1 = 0.0;
  double slack = 1.0;
  CLI::App* tune = app.add_subcommand(
      "tune", "Grid-search (beta1, beta2) minimizing energy under the "
              "convergence-time constraint");
  add_common_options(tune, tune_args);
  tune->add_option("--grid", grid, "Grid resolution per axis")
      ->capture_default_str();
  CLI::Option* beta1_opt =
      tune->add_option("--beta1", tune_beta1, "Fix beta1 and search beta2 only");
  tune->add_option("--slack", slack,
                   "Constraint is J_emp < slack * J_baseline")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return cmd_simulate(sim_args);
    if (benchmark->parsed()) return cmd_benchmark(bench_args);
    if (chatter->parsed()) return cmd_chatter(mu, c_beta1, c_beta2);
    if (tune->parsed()) {
      std::optional<double> beta1_fixed;
      if (beta1_opt->count() > 0) beta1_fixed = tune_beta1;
      return cmd_tune(tune_args, grid, beta1_fixed, slack);
    }
  } catch (const SimulationFault& e) {
    std::cerr << "smbench fatal (numerical): " << e.what() << "\n";
    return kExitFatal;
  } catch (const std::exception& e) {
    std::cerr << "smbench error: " << e.what() << "\n";
    return kExitFatal;
  }
  return kExitFatal;
}

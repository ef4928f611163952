// mst-sketch: estimate per-vertex minimum spanning tree costs of large
// randomly weighted graphs from a small resampled auxiliary graph, and run
// the Monte Carlo experiments that validate the estimator.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mstsketch/errors.hpp"
#include "mstsketch/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitSizeCap = 4;

struct CliOptions {
  std::string config_path;
  mstsketch::RunConfig flags; // values set on the command line
  // CLI11 reports which flags were actually passed; only those override the
  // config file.
  bool has_model = false, has_phi1 = false, has_phi2 = false,
       has_schedule = false, has_n = false, has_grid = false, has_reps = false,
       has_seed = false, has_workers = false, has_psi0 = false,
       has_fhat = false, has_bandwidth = false, has_cap = false,
       has_subsample = false, has_out = false, has_input = false,
       has_colors = false, has_aux = false, has_tree_out = false;
  std::string psi0_value;
};

void add_common_flags(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path,
                  "JSON config file; explicit flags override its values");
  cmd->add_option("--model", opts.flags.model,
                  "weight model: uniform:a,b | exp:rate | weibull:shape,scale")
      ->each([&](const std::string&) { opts.has_model = true; });
  cmd->add_option("--phi1", opts.flags.phi1,
                  "edge cost transform: identity | pow:p | log1p | scaled:c,<inner>")
      ->each([&](const std::string&) { opts.has_phi1 = true; });
  cmd->add_option("--phi2", opts.flags.phi2,
                  "vertex cost: zero | hist:c1,c2,...")
      ->each([&](const std::string&) { opts.has_phi2 = true; });
  cmd->add_option("--schedule", opts.flags.schedule,
                  "auxiliary size schedule: sqrt | logsq | explicit:n=d,...")
      ->each([&](const std::string&) { opts.has_schedule = true; });
  cmd->add_option("--n", opts.flags.n, "source vertex count (or sample size)")
      ->each([&](const std::string&) { opts.has_n = true; });
  cmd->add_option("--n-grid", opts.flags.n_grid,
                  "comma-separated grid of sizes")
      ->delimiter(',')
      ->each([&](const std::string&) { opts.has_grid = true; });
  cmd->add_option("--reps", opts.flags.replications, "Monte Carlo replications")
      ->each([&](const std::string&) { opts.has_reps = true; });
  cmd->add_option("--seed", opts.flags.master_seed, "master seed")
      ->each([&](const std::string&) { opts.has_seed = true; });
  cmd->add_option("--workers", opts.flags.workers, "parallel workers")
      ->each([&](const std::string&) { opts.has_workers = true; });
  cmd->add_option("--psi0", opts.psi0_value,
                  "boundary estimator: dq | reflect | naive")
      ->each([&](const std::string&) { opts.has_psi0 = true; });
  cmd->add_option("--fhat", opts.flags.fhat,
                  "edge distribution estimate: bootstrap | smoothed:h")
      ->each([&](const std::string&) { opts.has_fhat = true; });
  cmd->add_option("--bandwidth", opts.flags.bandwidth,
                  "psi0 bandwidth: auto | <value>")
      ->each([&](const std::string&) { opts.has_bandwidth = true; });
  cmd->add_option("--cap", opts.flags.direct_cap, "direct-solve vertex cap")
      ->each([&](const std::string&) { opts.has_cap = true; });
  cmd->add_option("--subsample-cap", opts.flags.subsample_cap,
                  "edge weight subsample cap")
      ->each([&](const std::string&) { opts.has_subsample = true; });
  cmd->add_option("--out", opts.flags.out, "output path (default stdout)")
      ->each([&](const std::string&) { opts.has_out = true; });
  cmd->add_option("--input", opts.flags.input, "edge-list input file")
      ->each([&](const std::string&) { opts.has_input = true; });
  cmd->add_option("--color-model", opts.flags.color_model,
                  "color probabilities p1,p2,... for synthetic colored sources")
      ->each([&](const std::string&) { opts.has_colors = true; });
  cmd->add_option("--aux-topology", opts.flags.aux_topology,
                  "auxiliary topology: complete | density")
      ->each([&](const std::string&) { opts.has_aux = true; });
  cmd->add_option("--tree-out", opts.flags.tree_out,
                  "write the auxiliary tree as JSON to this path")
      ->each([&](const std::string&) { opts.has_tree_out = true; });
}

mstsketch::RunConfig resolve_config(const CliOptions& opts,
                                    const std::string& command) {
  mstsketch::RunConfig cfg;
  if (!opts.config_path.empty())
    cfg = mstsketch::load_config_file(opts.config_path, cfg);
  cfg.command = command;
  if (opts.has_model) cfg.model = opts.flags.model;
  if (opts.has_phi1) cfg.phi1 = opts.flags.phi1;
  if (opts.has_phi2) cfg.phi2 = opts.flags.phi2;
  if (opts.has_schedule) cfg.schedule = opts.flags.schedule;
  if (opts.has_n) cfg.n = opts.flags.n;
  if (opts.has_grid) cfg.n_grid = opts.flags.n_grid;
  if (opts.has_reps) cfg.replications = opts.flags.replications;
  if (opts.has_seed) cfg.master_seed = opts.flags.master_seed;
  if (opts.has_workers) cfg.workers = opts.flags.workers;
  if (opts.has_psi0) cfg.psi0 = opts.psi0_value;
  if (opts.has_fhat) cfg.fhat = opts.flags.fhat;
  if (opts.has_bandwidth) cfg.bandwidth = opts.flags.bandwidth;
  if (opts.has_cap) cfg.direct_cap = opts.flags.direct_cap;
  if (opts.has_subsample) cfg.subsample_cap = opts.flags.subsample_cap;
  if (opts.has_out) cfg.out = opts.flags.out;
  if (opts.has_input) cfg.input = opts.flags.input;
  if (opts.has_colors) cfg.color_model = opts.flags.color_model;
  if (opts.has_aux) cfg.aux_topology = opts.flags.aux_topology;
  if (opts.has_tree_out) cfg.tree_out = opts.flags.tree_out;
  return cfg;
}

void emit(const mstsketch::RunConfig& cfg, const mstsketch::CommandOutput& out) {
  if (cfg.out.empty()) {
    std::cout << out.payload;
    if (!out.payload.empty() && out.payload.back() != '\n')
      std::cout << "\n";
  } else {
    std::ofstream file(cfg.out);
    if (!file)
      throw mstsketch::ValidationError("cannot open output file: " + cfg.out);
    file << out.payload;
  }
  std::cerr << out.summary << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mst-sketch: sketch-based estimation of minimum spanning tree "
               "costs on large randomly weighted graphs"};
  app.require_subcommand(1);

  CliOptions opts;
  const char* commands[] = {"frieze", "estimate", "convergence", "boundary",
                            "bench"};
  const char* descriptions[] = {
      "direct phi-MST cost of complete random graphs vs the analytic limit",
      "run the sketch pipeline once and emit a JSON report",
      "sketch vs direct cost over a grid of source sizes (CSV)",
      "boundary estimator study: psi0 quality per method (CSV)",
      "wall-time of the direct solve vs the sketch pipeline (CSV)"};
  for (int i = 0; i < 5; ++i)
    add_common_flags(app.add_subcommand(commands[i], descriptions[i]), opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) // --help
      return app.exit(e);
    app.exit(e);
    return kExitValidation;
  }

  try {
    const mstsketch::RunConfig cfg =
        resolve_config(opts, app.get_subcommands().front()->get_name());
    emit(cfg, mstsketch::run_command(cfg));
    return kExitOk;
  } catch (const mstsketch::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mstsketch::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const mstsketch::SizeCapError& e) {
    std::cerr << "size cap error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

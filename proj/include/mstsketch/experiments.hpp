#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mstsketch/sketch.hpp"

namespace mstsketch {

// Everything a command run depends on. Statistical outputs are a pure
// function of this struct; wall-clock columns are the only exception.
struct RunConfig {
  std::string command;
  std::string model = "uniform:0,1";
  std::string phi1 = "identity";
  std::string phi2 = "zero";
  std::string schedule = "sqrt";
  std::size_t n = 0; // 0 = unset
  std::vector<std::size_t> n_grid;
  std::size_t replications = 30;
  std::uint64_t master_seed = 1;
  unsigned workers = 1;
  // Unset selects the default pipeline estimator (difference quotient) and
  // makes the boundary study run all three methods side by side.
  std::optional<std::string> psi0;
  std::string fhat = "bootstrap"; // bootstrap | smoothed:h
  std::string bandwidth = "auto"; // auto | <value>
  std::size_t direct_cap = 20000;
  std::size_t subsample_cap = 1'000'000;
  std::string out;   // empty = stdout
  std::string input; // estimate: edge-list file instead of a synthetic model
  std::string color_model;               // estimate: probabilities p1,p2,...
  std::string aux_topology = "complete"; // complete | density
  std::string tree_out;                  // estimate: auxiliary tree JSON
};

// Applies the values present in a config JSON object on top of cfg.
// Unknown keys are rejected.
void apply_config_json(RunConfig& cfg, const std::string& json_text);
RunConfig load_config_file(const std::string& path, RunConfig base = {});

SketchConfig make_sketch_config(const RunConfig& cfg);

struct SummaryStats {
  double mean = 0.0;
  double sd = 0.0; // sample standard deviation
  double ci95_half_width = 0.0;
  std::size_t count = 0;

  static SummaryStats from(std::span<const double> values);
};

// One Monte Carlo replication, keyed uniquely by (experiment, n, rep).
struct TrialRecord {
  std::string experiment;
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> quantities;
};

// ---- frieze: direct phi-MST cost of complete graphs vs the analytic limit

struct FriezeRow {
  std::size_t n = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  double cost = 0.0;
  double analytic_limit = 0.0;
};

struct FriezeResult {
  std::vector<FriezeRow> rows;
  SummaryStats summary;
  double analytic_limit = 0.0;
  std::string csv;
  std::string summary_line;
};

FriezeResult run_frieze(const RunConfig& cfg);
std::vector<FriezeRow> parse_frieze_csv(const std::string& csv);
std::string frieze_rows_to_csv(std::span<const FriezeRow> rows);

// ---- estimate: one pipeline run on a file or synthetic source

struct EstimateResult {
  EstimateReport report;
  std::string json;
  std::string summary_line;
};

EstimateResult run_estimate(const RunConfig& cfg);

// ---- convergence: sketch vs direct over an n grid

struct ConvergenceResult {
  ConsistencyResult experiment;
  std::string csv;
  std::string summary_line;
};

ConvergenceResult run_convergence(const RunConfig& cfg);
std::vector<ConsistencyTrial> parse_convergence_csv(const std::string& csv);
std::string convergence_trials_to_csv(std::span<const ConsistencyTrial> trials);

// ---- boundary: psi0 estimator quality across sample sizes

struct BoundaryRow {
  std::size_t m = 0;
  std::size_t rep = 0;
  Psi0Method method = Psi0Method::DifferenceQuotient;
  double psi0 = 0.0;
  double abs_error = 0.0;
};

struct BoundaryResult {
  std::vector<BoundaryRow> rows; // sorted by (method, m, rep)
  std::string csv;
  std::string summary_line;
};

BoundaryResult run_boundary(const RunConfig& cfg);
std::vector<BoundaryRow> parse_boundary_csv(const std::string& csv);
std::string boundary_rows_to_csv(std::span<const BoundaryRow> rows);

// ---- bench: direct solve vs sketch pipeline wall time

struct BenchRow {
  std::size_t n = 0;
  std::size_t rep = 0;
  double direct_cost = 0.0;
  double sketch_cost = 0.0;
  double direct_ms = 0.0;
  double sketch_ms = 0.0;
  double ratio = 0.0; // direct_ms / sketch_ms
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::string csv;
  std::string summary_line;
};

BenchResult run_bench(const RunConfig& cfg);
std::vector<BenchRow> parse_bench_csv(const std::string& csv);

// Generic record view used by the lossless round-trip checks.
std::vector<TrialRecord> frieze_trial_records(const FriezeResult&);
std::vector<TrialRecord> convergence_trial_records(const ConvergenceResult&);
std::vector<TrialRecord> boundary_trial_records(const BoundaryResult&);

struct CommandOutput {
  std::string payload; // CSV table or JSON report
  std::string summary; // human-readable line(s)
};

// Dispatch on cfg.command; payload goes to cfg.out (or stdout).
CommandOutput run_command(const RunConfig& cfg);

} // namespace mstsketch

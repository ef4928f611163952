#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstsketch/boundary.hpp"
#include "mstsketch/cost.hpp"
#include "mstsketch/distributions.hpp"
#include "mstsketch/graph.hpp"
#include "mstsketch/mst.hpp"
#include "mstsketch/rng.hpp"

namespace mstsketch {

// Size d(n) of the auxiliary graph: must grow without bound while d(n)/n
// vanishes. Shipped schedules: ceil(sqrt(n)) and ceil((ln n)^2); explicit
// tables cover everything else.
class SketchSchedule {
public:
  enum class Kind { SqrtN, LogSquared, Explicit };

  static SketchSchedule sqrt_n();
  static SketchSchedule log_squared();
  static SketchSchedule explicit_table(std::map<std::size_t, std::size_t> table);

  // d(n) for n >= 4; guarantees 2 <= d <= n.
  std::size_t d_for(std::size_t n) const;

  Kind kind() const { return kind_; }
  std::string to_string() const;
  // sqrt | logsq | explicit:n1=d1,n2=d2,...
  static SketchSchedule parse(std::string_view spec);

private:
  SketchSchedule(Kind kind) : kind_(kind) {}
  Kind kind_;
  std::map<std::size_t, std::size_t> table_;
};

enum class FhatMethod { Bootstrap, SmoothedBootstrap };

std::string to_string(FhatMethod method);

enum class AuxTopology { Complete, MatchSourceDensity };

// Free choices of the estimation pipeline.
struct SketchConfig {
  SketchSchedule schedule = SketchSchedule::sqrt_n();
  Psi0Method psi0_method = Psi0Method::DifferenceQuotient;
  BandwidthRule psi0_bandwidth = BandwidthRule::automatic();
  FhatMethod fhat_method = FhatMethod::Bootstrap;
  double fhat_bandwidth = 0.0; // required > 0 for the smoothed bootstrap
  CostSpec cost;
  std::size_t edge_subsample_cap = 1'000'000; // >= 1000
  bool estimate_color_model = true;
  AuxTopology aux_topology = AuxTopology::Complete;
  // Edge probability for the density-matched auxiliary; defaults to the
  // source density when the caller knows it.
  std::optional<double> aux_edge_probability;

  void validate() const;
};

// Output of one pipeline run. sketch_tree_cost is the phi-cost of the
// auxiliary tree and avcost_hat = sketch_tree_cost / d is the per-vertex
// estimate.
struct EstimateReport {
  std::size_t n = 0;
  std::size_t d = 0;
  double avcost_hat = 0.0;
  double sketch_tree_cost = 0.0;
  // Absent when the psi0 estimator hit a degenerate sample; the diagnostic
  // is recorded but never blocks the estimate itself.
  std::optional<BoundaryEstimate> psi0;
  std::optional<double> analytic_limit;
  std::optional<double> direct_cost;
  std::optional<std::vector<double>> color_pmf;
  SpanningTree tree; // auxiliary tree, in-memory only
};

std::string report_to_json(const EstimateReport& report);
std::string tree_to_json(const SpanningTree& tree);

// All edge weights of g, or a uniform subsample of `cap` of them when the
// graph is larger. Weights are i.i.d., so the subsample is statistically
// interchangeable with the full collection.
WeightSample observed_from_graph(const WeightedGraph& g, std::size_t cap,
                                 RandomStream& rng);

ResamplingModel make_fhat(const SketchConfig& cfg, WeightSample observed);

// Auxiliary graph on d(n) vertices with every edge weight resampled from
// the estimated distribution.
WeightedGraph build_auxiliary(const SketchConfig& cfg,
                              const WeightSample& observed, std::size_t n,
                              RandomStream& rng);

// The full pipeline: estimate the distributions, build the auxiliary graph,
// solve its phi-MST and report the per-vertex estimate. true_model, when
// given, only attaches the analytic limit for comparison; the pipeline never
// reads it.
EstimateReport estimate_avcost(const SketchConfig& cfg,
                               const WeightSample& observed,
                               const VertexColoring* coloring, std::size_t n,
                               const WeightModel* true_model,
                               RandomStream& rng);

struct ConsistencyTrial {
  std::size_t n = 0;
  std::size_t rep = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  std::optional<double> psi0;
  double sketch_tree_cost = 0.0;
  double direct_cost = 0.0;
  double analytic_limit = 0.0;
};

struct ConsistencyRow {
  std::size_t n = 0;
  double mean_abs_sketch_vs_direct = 0.0;
  double mean_abs_sketch_vs_limit = 0.0;
};

struct ConsistencyResult {
  std::vector<ConsistencyTrial> trials; // sorted by (n, rep)
  std::vector<ConsistencyRow> rows;
};

// Sketch-versus-direct comparison over a grid of source sizes. Each
// (n, rep) trial generates a fresh complete graph from true_model, solves
// it directly as the oracle and runs the pipeline on its observed weights.
// Trials run on derived per-trial streams, so results are independent of
// the worker count.
ConsistencyResult consistency_experiment(const SketchConfig& cfg,
                                         const WeightModel& true_model,
                                         std::span<const std::size_t> n_grid,
                                         std::size_t replications,
                                         std::uint64_t master_seed,
                                         unsigned workers,
                                         std::size_t direct_cap);

} // namespace mstsketch

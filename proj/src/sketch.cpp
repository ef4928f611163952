#include "mstsketch/sketch.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "mstsketch/errors.hpp"
#include "mstsketch/parallel.hpp"

namespace mstsketch {

namespace {

std::size_t ceil_sqrt(std::size_t n) {
  auto d = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (d * d < n)
    ++d;
  while (d > 1 && (d - 1) * (d - 1) >= n)
    --d;
  return d;
}

constexpr int kAttemptCapDensityAux = 1000;

} // namespace

SketchSchedule SketchSchedule::sqrt_n() { return SketchSchedule(Kind::SqrtN); }

SketchSchedule SketchSchedule::log_squared() {
  return SketchSchedule(Kind::LogSquared);
}

SketchSchedule
SketchSchedule::explicit_table(std::map<std::size_t, std::size_t> table) {
  if (table.empty())
    throw ValidationError("explicit schedule table must be nonempty");
  SketchSchedule s(Kind::Explicit);
  s.table_ = std::move(table);
  return s;
}

std::size_t SketchSchedule::d_for(std::size_t n) const {
  if (n < 4)
    throw ValidationError("schedule requires n >= 4, got n = " +
                          std::to_string(n));
  std::size_t d = 0;
  switch (kind_) {
  case Kind::SqrtN:
    d = ceil_sqrt(n);
    break;
  case Kind::LogSquared: {
    const double l = std::log(static_cast<double>(n));
    d = static_cast<std::size_t>(std::ceil(l * l));
    break;
  }
  case Kind::Explicit: {
    const auto it = table_.find(n);
    if (it == table_.end())
      throw ValidationError("explicit schedule has no entry for n = " +
                            std::to_string(n));
    d = it->second;
    break;
  }
  }
  if (d < 2 || d > n)
    throw ValidationError("schedule produced d = " + std::to_string(d) +
                          " outside [2, n] for n = " + std::to_string(n));
  return d;
}

std::string SketchSchedule::to_string() const {
  switch (kind_) {
  case Kind::SqrtN:
    return "sqrt";
  case Kind::LogSquared:
    return "logsq";
  case Kind::Explicit: {
    std::string out = "explicit:";
    bool first = true;
    for (const auto& [n, d] : table_) {
      if (!first)
        out += ",";
      first = false;
      out += std::to_string(n) + "=" + std::to_string(d);
    }
    return out;
  }
  }
  return {};
}

SketchSchedule SketchSchedule::parse(std::string_view spec) {
  if (spec == "sqrt")
    return sqrt_n();
  if (spec == "logsq")
    return log_squared();
  if (spec.substr(0, 9) == "explicit:") {
    std::map<std::size_t, std::size_t> table;
    std::string_view args = spec.substr(9);
    while (!args.empty()) {
      const std::size_t comma = args.find(',');
      const std::string_view entry = args.substr(0, comma);
      const std::size_t eq = entry.find('=');
      if (eq == std::string_view::npos)
        throw ValidationError("explicit schedule expects n=d pairs, got `" +
                              std::string(entry) + "`");
      std::size_t n = 0, d = 0;
      const auto rn =
          std::from_chars(entry.data(), entry.data() + eq, n);
      const auto rd = std::from_chars(entry.data() + eq + 1,
                                      entry.data() + entry.size(), d);
      if (rn.ec != std::errc{} || rd.ec != std::errc{} ||
          rn.ptr != entry.data() + eq ||
          rd.ptr != entry.data() + entry.size())
        throw ValidationError("cannot parse schedule entry `" +
                              std::string(entry) + "`");
      table[n] = d;
      if (comma == std::string_view::npos)
        break;
      args = args.substr(comma + 1);
    }
    return explicit_table(std::move(table));
  }
  throw ValidationError("unknown schedule `" + std::string(spec) +
                        "` (expected sqrt | logsq | explicit:n=d,...)");
}

std::string to_string(FhatMethod method) {
  return method == FhatMethod::Bootstrap ? "bootstrap" : "smoothed";
}

void SketchConfig::validate() const {
  if (edge_subsample_cap < 1000)
    throw ValidationError("edge subsample cap must be >= 1000");
  if (fhat_method == FhatMethod::SmoothedBootstrap && !(fhat_bandwidth > 0.0))
    throw ValidationError("smoothed bootstrap requires a positive bandwidth");
  if (aux_edge_probability &&
      !(*aux_edge_probability > 0.0 && *aux_edge_probability <= 1.0))
    throw ValidationError("auxiliary edge probability must lie in (0, 1]");
}

WeightSample observed_from_graph(const WeightedGraph& g, std::size_t cap,
                                 RandomStream& rng) {
  const std::size_t m = g.edge_count();
  if (m == 0)
    throw ValidationError("graph has no edges to observe");
  std::vector<double> values;
  if (m <= cap) {
    values.reserve(m);
    g.for_each_edge(
        [&](std::size_t, const Edge& e) { values.push_back(e.weight); });
  } else {
    values.resize(cap);
    for (double& v : values)
      v = g.edge_weight(rng.below(m));
  }
  return WeightSample(std::move(values));
}

ResamplingModel make_fhat(const SketchConfig& cfg, WeightSample observed) {
  if (cfg.fhat_method == FhatMethod::SmoothedBootstrap)
    return ResamplingModel::smoothed_bootstrap(std::move(observed),
                                               cfg.fhat_bandwidth);
  return ResamplingModel::bootstrap(std::move(observed));
}

namespace {

WeightedGraph build_density_matched_auxiliary(const ResamplingModel& fhat,
                                              std::size_t d, double edge_prob,
                                              RandomStream& rng) {
  // Erdos-Renyi topology at the source edge density, conditioned on
  // connectivity by rejection.
  for (int attempt = 0; attempt < kAttemptCapDensityAux; ++attempt) {
    std::vector<std::tuple<VertexId, VertexId, double>> raw;
    for (VertexId u = 0; u + 1 < d; ++u)
      for (VertexId v = u + 1; v < d; ++v)
        if (rng.uniform01() < edge_prob)
          raw.emplace_back(u, v, fhat.draw(rng));
    WeightedGraph g = WeightedGraph::from_edge_list(d, raw);
    if (g.is_connected())
      return g;
  }
  throw PreconditionError(
      "density-matched auxiliary graph stayed disconnected after " +
      std::to_string(kAttemptCapDensityAux) + " attempts; edge probability "
      "is too low for d(n)");
}

} // namespace

WeightedGraph build_auxiliary(const SketchConfig& cfg,
                              const WeightSample& observed, std::size_t n,
                              RandomStream& rng) {
  cfg.validate();
  const std::size_t d = cfg.schedule.d_for(n);
  ResamplingModel fhat = make_fhat(cfg, observed);
  if (cfg.aux_topology == AuxTopology::MatchSourceDensity) {
    const double p = cfg.aux_edge_probability.value_or(1.0);
    return build_density_matched_auxiliary(fhat, d, p, rng);
  }
  return WeightedGraph::complete(d, [&] { return fhat.draw(rng); });
}

EstimateReport estimate_avcost(const SketchConfig& cfg,
                               const WeightSample& observed,
                               const VertexColoring* coloring, std::size_t n,
                               const WeightModel* true_model,
                               RandomStream& rng) {
  cfg.validate();
  EstimateReport report;
  report.n = n;
  report.d = cfg.schedule.d_for(n);

  if (coloring != nullptr && cfg.estimate_color_model)
    report.color_pmf = empirical_pmf(*coloring).probabilities();

  // psi0 is a boundary diagnostic; a degenerate sample (e.g. constant
  // weights) is recorded as absent rather than failing the estimate.
  try {
    report.psi0 = estimate_psi0(cfg.psi0_method, observed, cfg.psi0_bandwidth);
  } catch (const PreconditionError&) {
    report.psi0 = std::nullopt;
  }

  WeightedGraph auxiliary = build_auxiliary(cfg, observed, n, rng);

  std::optional<VertexColoring> aux_coloring;
  if (!cfg.cost.phi2.is_zero()) {
    if (coloring == nullptr)
      throw ValidationError(
          "a nonzero vertex cost requires a source coloring to estimate");
    const ColorModel color_model = empirical_pmf(*coloring);
    aux_coloring = color_model.sample_coloring(report.d, rng);
  }

  PhiMstResult solved = phi_mst(auxiliary, cfg.cost,
                                aux_coloring ? &*aux_coloring : nullptr);
  report.sketch_tree_cost = solved.cost;
  report.avcost_hat = solved.cost / static_cast<double>(report.d);
  report.tree = std::move(solved.tree);

  if (true_model != nullptr)
    report.analytic_limit =
        limit_value(cfg.cost.phi1, true_model->density_at_zero());
  return report;
}

namespace {

nlohmann::json estimate_to_json_value(const BoundaryEstimate& est) {
  return nlohmann::json{{"psi0", est.psi0},
                        {"bandwidth", est.bandwidth},
                        {"method", to_string(est.method)}};
}

} // namespace

std::string report_to_json(const EstimateReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["d"] = report.d;
  j["avcost_hat"] = report.avcost_hat;
  j["sketch_tree_cost"] = report.sketch_tree_cost;
  j["psi0"] = report.psi0 ? estimate_to_json_value(*report.psi0)
                          : nlohmann::json(nullptr);
  j["analytic_limit"] = report.analytic_limit
                            ? nlohmann::json(*report.analytic_limit)
                            : nlohmann::json(nullptr);
  j["direct_cost"] = report.direct_cost ? nlohmann::json(*report.direct_cost)
                                        : nlohmann::json(nullptr);
  if (report.color_pmf)
    j["color_pmf"] = *report.color_pmf;
  return j.dump(2);
}

std::string tree_to_json(const SpanningTree& tree) {
  nlohmann::json j;
  j["edge_indices"] = tree.edge_indices;
  j["total_weight"] = tree.total_weight;
  return j.dump(2);
}

ConsistencyResult consistency_experiment(const SketchConfig& cfg,
                                         const WeightModel& true_model,
                                         std::span<const std::size_t> n_grid,
                                         std::size_t replications,
                                         std::uint64_t master_seed,
                                         unsigned workers,
                                         std::size_t direct_cap) {
  cfg.validate();
  if (!cfg.cost.phi2.is_zero())
    throw ValidationError(
        "the consistency experiment covers edge-only costs (phi2 = 0)");
  for (std::size_t n : n_grid)
    if (n > direct_cap)
      throw SizeCapError("n = " + std::to_string(n) +
                         " exceeds the direct-solve cap " +
                         std::to_string(direct_cap));

  ConsistencyResult result;
  if (replications == 0 || n_grid.empty())
    return result;
  result.trials.resize(n_grid.size() * replications);

  parallel_for(result.trials.size(), workers, [&](std::size_t slot) {
    const std::size_t n = n_grid[slot / replications];
    const std::size_t rep = slot % replications;
    const std::uint64_t seed = derive_seed(master_seed, "convergence", n, rep);
    RandomStream rng(seed);

    WeightedGraph source =
        WeightedGraph::complete(n, [&] { return true_model.sample(rng); });
    const PhiMstResult direct = phi_mst(source, cfg.cost);
    const WeightSample observed =
        observed_from_graph(source, cfg.edge_subsample_cap, rng);
    const EstimateReport report =
        estimate_avcost(cfg, observed, nullptr, n, &true_model, rng);

    ConsistencyTrial trial;
    trial.n = n;
    trial.rep = rep;
    trial.d = report.d;
    trial.seed = seed;
    if (report.psi0)
      trial.psi0 = report.psi0->psi0;
    trial.sketch_tree_cost = report.sketch_tree_cost;
    trial.direct_cost = direct.cost;
    trial.analytic_limit = *report.analytic_limit;
    result.trials[slot] = trial;
  });

  for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
    double sum_direct = 0.0, sum_limit = 0.0;
    for (std::size_t rep = 0; rep < replications; ++rep) {
      const ConsistencyTrial& t = result.trials[gi * replications + rep];
      sum_direct += std::abs(t.sketch_tree_cost - t.direct_cost);
      sum_limit += std::abs(t.sketch_tree_cost - t.analytic_limit);
    }
    const double r = static_cast<double>(replications);
    result.rows.push_back(
        ConsistencyRow{n_grid[gi], sum_direct / r, sum_limit / r});
  }
  return result;
}

} // namespace mstsketch

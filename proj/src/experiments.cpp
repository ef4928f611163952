#include "mstsketch/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mstsketch/errors.hpp"
#include "mstsketch/parallel.hpp"
#include "mstsketch/textio.hpp"

namespace mstsketch {

namespace {

using json = nlohmann::json;

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::size_t require_n(const RunConfig& cfg, std::size_t minimum) {
  if (cfg.n < minimum)
    throw ValidationError(cfg.command + " requires n >= " +
                          std::to_string(minimum) + " (use --n)");
  return cfg.n;
}

std::vector<std::size_t> grid_or_single(const RunConfig& cfg,
                                        std::size_t minimum) {
  if (!cfg.n_grid.empty()) {
    for (std::size_t n : cfg.n_grid)
      if (n < minimum)
        throw ValidationError("grid point " + std::to_string(n) +
                              " below the minimum " + std::to_string(minimum));
    return cfg.n_grid;
  }
  return {require_n(cfg, minimum)};
}

void require_replications(const RunConfig& cfg) {
  if (cfg.replications < 1)
    throw ValidationError("replications must be >= 1");
}

} // namespace

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object())
    throw ValidationError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "command")
        cfg.command = value.get<std::string>();
      else if (key == "model")
        cfg.model = value.get<std::string>();
      else if (key == "phi1")
        cfg.phi1 = value.get<std::string>();
      else if (key == "phi2")
        cfg.phi2 = value.get<std::string>();
      else if (key == "schedule")
        cfg.schedule = value.get<std::string>();
      else if (key == "n")
        cfg.n = value.get<std::size_t>();
      else if (key == "n_grid")
        cfg.n_grid = value.get<std::vector<std::size_t>>();
      else if (key == "reps")
        cfg.replications = value.get<std::size_t>();
      else if (key == "seed")
        cfg.master_seed = value.get<std::uint64_t>();
      else if (key == "workers")
        cfg.workers = value.get<unsigned>();
      else if (key == "psi0")
        cfg.psi0 = value.get<std::string>();
      else if (key == "fhat")
        cfg.fhat = value.get<std::string>();
      else if (key == "bandwidth")
        cfg.bandwidth = value.get<std::string>();
      else if (key == "cap")
        cfg.direct_cap = value.get<std::size_t>();
      else if (key == "subsample_cap")
        cfg.subsample_cap = value.get<std::size_t>();
      else if (key == "out")
        cfg.out = value.get<std::string>();
      else if (key == "input")
        cfg.input = value.get<std::string>();
      else if (key == "color_model")
        cfg.color_model = value.get<std::string>();
      else if (key == "aux_topology")
        cfg.aux_topology = value.get<std::string>();
      else if (key == "tree_out")
        cfg.tree_out = value.get<std::string>();
      else
        throw ValidationError("unknown config key `" + key + "`");
    } catch (const json::exception&) {
      throw ValidationError("config key `" + key + "` has the wrong type");
    }
  }
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  apply_config_json(base, buf.str());
  return base;
}

SketchConfig make_sketch_config(const RunConfig& cfg) {
  SketchConfig scfg;
  scfg.schedule = SketchSchedule::parse(cfg.schedule);
  scfg.psi0_method = parse_psi0_method(cfg.psi0.value_or("dq"));
  if (cfg.bandwidth != "auto")
    scfg.psi0_bandwidth = BandwidthRule::fixed(parse_double_field(cfg.bandwidth));
  if (cfg.fhat == "bootstrap") {
    scfg.fhat_method = FhatMethod::Bootstrap;
  } else if (cfg.fhat.rfind("smoothed:", 0) == 0) {
    scfg.fhat_method = FhatMethod::SmoothedBootstrap;
    scfg.fhat_bandwidth = parse_double_field(
        std::string_view(cfg.fhat).substr(std::string_view("smoothed:").size()));
  } else {
    throw ValidationError("unknown fhat `" + cfg.fhat +
                          "` (expected bootstrap | smoothed:h)");
  }
  scfg.cost.phi1 = EdgeCostTransform::parse(cfg.phi1);
  scfg.cost.phi2 = VertexCostFunction::parse(cfg.phi2);
  scfg.edge_subsample_cap = cfg.subsample_cap;
  if (cfg.aux_topology == "complete")
    scfg.aux_topology = AuxTopology::Complete;
  else if (cfg.aux_topology == "density")
    scfg.aux_topology = AuxTopology::MatchSourceDensity;
  else
    throw ValidationError("unknown aux topology `" + cfg.aux_topology +
                          "` (expected complete | density)");
  scfg.validate();
  return scfg;
}

SummaryStats SummaryStats::from(std::span<const double> values) {
  SummaryStats s;
  s.count = values.size();
  if (s.count == 0)
    return s;
  double sum = 0.0;
  for (double v : values)
    sum += v;
  s.mean = sum / static_cast<double>(s.count);
  if (s.count >= 2) {
    double ss = 0.0;
    for (double v : values)
      ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.count - 1));
  }
  s.ci95_half_width = 1.96 * s.sd / std::sqrt(static_cast<double>(s.count));
  return s;
}

// ---- frieze ---------------------------------------------------------------

FriezeResult run_frieze(const RunConfig& cfg) {
  require_replications(cfg);
  const std::size_t n = require_n(cfg, 2);
  if (n > cfg.direct_cap)
    throw SizeCapError("n = " + std::to_string(n) +
                       " exceeds the direct-solve cap " +
                       std::to_string(cfg.direct_cap));
  const WeightModel model = WeightModel::parse(cfg.model);
  CostSpec cost;
  cost.phi1 = EdgeCostTransform::parse(cfg.phi1);
  cost.phi2 = VertexCostFunction::parse(cfg.phi2);
  if (!cost.phi2.is_zero())
    throw ValidationError("the frieze check covers edge-only costs (phi2 = zero)");
  const double limit = limit_value(cost.phi1, model.density_at_zero());

  FriezeResult result;
  result.analytic_limit = limit;
  result.rows.resize(cfg.replications);
  parallel_for(cfg.replications, cfg.workers, [&](std::size_t rep) {
    const std::uint64_t seed = derive_seed(cfg.master_seed, "frieze", n, rep);
    RandomStream rng(seed);
    const WeightedGraph g =
        WeightedGraph::complete(n, [&] { return model.sample(rng); });
    const PhiMstResult solved = phi_mst(g, cost);
    result.rows[rep] = FriezeRow{n, rep, seed, solved.cost, limit};
  });

  std::vector<double> costs(cfg.replications);
  for (std::size_t i = 0; i < cfg.replications; ++i)
    costs[i] = result.rows[i].cost;
  result.summary = SummaryStats::from(costs);
  result.csv = frieze_rows_to_csv(result.rows);

  std::ostringstream line;
  line << "frieze: n=" << n << " reps=" << cfg.replications
       << " mean=" << format_double(result.summary.mean)
       << " sd=" << format_double(result.summary.sd)
       << " ci95=" << format_double(result.summary.ci95_half_width)
       << " limit=" << format_double(limit);
  result.summary_line = line.str();
  return result;
}

std::string frieze_rows_to_csv(std::span<const FriezeRow> rows) {
  std::string out = "n,rep,seed,cost,analytic_limit\n";
  for (const FriezeRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.rep) + "," +
           std::to_string(r.seed) + "," + format_double(r.cost) + "," +
           format_double(r.analytic_limit) + "\n";
  }
  return out;
}

std::vector<FriezeRow> parse_frieze_csv(const std::string& csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != "n,rep,seed,cost,analytic_limit")
    throw ValidationError("unexpected frieze CSV header");
  std::vector<FriezeRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 5)
      throw ValidationError("frieze CSV row has wrong field count");
    rows.push_back(FriezeRow{parse_u64_field(f[0]), parse_u64_field(f[1]),
                             parse_u64_field(f[2]), parse_double_field(f[3]),
                             parse_double_field(f[4])});
  }
  return rows;
}

// ---- estimate -------------------------------------------------------------

EstimateResult run_estimate(const RunConfig& cfg) {
  const SketchConfig scfg_base = make_sketch_config(cfg);
  SketchConfig scfg = scfg_base;

  EstimateReport report;
  if (!cfg.input.empty()) {
    // File-based source. The file format carries no coloring, so only
    // edge-dependent costs apply.
    if (!scfg.cost.phi2.is_zero())
      throw ValidationError(
          "edge-list files carry no coloring; phi2 must be zero");
    const WeightedGraph g = read_edge_list_file(cfg.input);
    if (!g.is_connected())
      throw ValidationError("input graph is disconnected");
    const std::size_t n = g.vertex_count();
    if (scfg.aux_topology == AuxTopology::MatchSourceDensity &&
        !scfg.aux_edge_probability)
      scfg.aux_edge_probability =
          static_cast<double>(g.edge_count()) /
          static_cast<double>(pair_count(n));
    RandomStream rng(derive_seed(cfg.master_seed, "estimate", n, 0));
    const WeightSample observed =
        observed_from_graph(g, scfg.edge_subsample_cap, rng);
    report = estimate_avcost(scfg, observed, nullptr, n, nullptr, rng);
    if (n <= cfg.direct_cap)
      report.direct_cost = phi_mst(g, scfg.cost).cost;
  } else {
    const std::size_t n = require_n(cfg, 4);
    const WeightModel model = WeightModel::parse(cfg.model);
    RandomStream rng(derive_seed(cfg.master_seed, "estimate", n, 0));

    std::optional<VertexColoring> coloring;
    if (!cfg.color_model.empty())
      coloring = ColorModel::parse(cfg.color_model).sample_coloring(n, rng);
    if (!scfg.cost.phi2.is_zero() && !coloring)
      throw ValidationError(
          "phi2 != zero on a synthetic source requires --color-model");

    // The analytic limit is only known when the density at zero is; the
    // Weibull controls still run, they just carry no limit.
    const WeightModel* truth =
        model.is_precondition_control() ? nullptr : &model;

    if (n <= cfg.direct_cap) {
      const WeightedGraph source =
          WeightedGraph::complete(n, [&] { return model.sample(rng); });
      const WeightSample observed =
          observed_from_graph(source, scfg.edge_subsample_cap, rng);
      report = estimate_avcost(scfg, observed, coloring ? &*coloring : nullptr,
                               n, truth, rng);
      if (scfg.cost.phi2.is_zero() || n <= 8)
        report.direct_cost =
            phi_mst(source, scfg.cost, coloring ? &*coloring : nullptr).cost;
    } else {
      // Too large to materialize: the observed subsample is drawn from the
      // weight model directly, which is distribution-identical to
      // subsampling the complete graph's i.i.d. edge weights.
      const std::size_t count =
          std::min<std::size_t>(scfg.edge_subsample_cap, pair_count(n));
      const WeightSample observed(model.sample_weights(count, rng));
      report = estimate_avcost(scfg, observed, coloring ? &*coloring : nullptr,
                               n, truth, rng);
    }
  }

  EstimateResult result;
  result.json = report_to_json(report);
  std::ostringstream line;
  line << "estimate: n=" << report.n << " d=" << report.d
       << " avcost_hat=" << format_double(report.avcost_hat)
       << " sketch_tree_cost=" << format_double(report.sketch_tree_cost);
  if (report.direct_cost)
    line << " direct_cost=" << format_double(*report.direct_cost);
  result.summary_line = line.str();
  result.report = std::move(report);
  return result;
}

// ---- convergence ----------------------------------------------------------

ConvergenceResult run_convergence(const RunConfig& cfg) {
  require_replications(cfg);
  const std::vector<std::size_t> grid = grid_or_single(cfg, 4);
  const WeightModel model = WeightModel::parse(cfg.model);
  const SketchConfig scfg = make_sketch_config(cfg);

  ConvergenceResult result;
  result.experiment =
      consistency_experiment(scfg, model, grid, cfg.replications,
                             cfg.master_seed, cfg.workers, cfg.direct_cap);
  result.csv = convergence_trials_to_csv(result.experiment.trials);

  std::ostringstream line;
  line << "convergence:";
  for (const ConsistencyRow& row : result.experiment.rows)
    line << " n=" << row.n << " mean|sketch-direct|="
         << format_double(row.mean_abs_sketch_vs_direct) << ";";
  result.summary_line = line.str();
  return result;
}

std::string convergence_trials_to_csv(std::span<const ConsistencyTrial> trials) {
  std::string out = "n,rep,d,psi0,sketch_tree_cost,direct_cost,analytic_limit\n";
  for (const ConsistencyTrial& t : trials) {
    out += std::to_string(t.n) + "," + std::to_string(t.rep) + "," +
           std::to_string(t.d) + "," +
           (t.psi0 ? format_double(*t.psi0) : "nan") + "," +
           format_double(t.sketch_tree_cost) + "," +
           format_double(t.direct_cost) + "," +
           format_double(t.analytic_limit) + "\n";
  }
  return out;
}

std::vector<ConsistencyTrial> parse_convergence_csv(const std::string& csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() ||
      lines[0] != "n,rep,d,psi0,sketch_tree_cost,direct_cost,analytic_limit")
    throw ValidationError("unexpected convergence CSV header");
  std::vector<ConsistencyTrial> trials;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 7)
      throw ValidationError("convergence CSV row has wrong field count");
    ConsistencyTrial t;
    t.n = parse_u64_field(f[0]);
    t.rep = parse_u64_field(f[1]);
    t.d = parse_u64_field(f[2]);
    const double psi0 = parse_double_field(f[3]);
    if (!std::isnan(psi0))
      t.psi0 = psi0;
    t.sketch_tree_cost = parse_double_field(f[4]);
    t.direct_cost = parse_double_field(f[5]);
    t.analytic_limit = parse_double_field(f[6]);
    trials.push_back(std::move(t));
  }
  return trials;
}

// ---- boundary -------------------------------------------------------------

BoundaryResult run_boundary(const RunConfig& cfg) {
  require_replications(cfg);
  const std::vector<std::size_t> m_values = grid_or_single(cfg, 2);
  const WeightModel model = WeightModel::parse(cfg.model);
  const double truth = model.density_at_zero();

  std::vector<Psi0Method> methods;
  if (cfg.psi0)
    methods = {parse_psi0_method(*cfg.psi0)};
  else
    methods = {Psi0Method::DifferenceQuotient, Psi0Method::ReflectionKernel,
               Psi0Method::NaiveKernel};

  BandwidthRule rule = BandwidthRule::automatic();
  if (cfg.bandwidth != "auto")
    rule = BandwidthRule::fixed(parse_double_field(cfg.bandwidth));

  BoundaryResult result;
  const std::size_t per_method = m_values.size() * cfg.replications;
  result.rows.resize(methods.size() * per_method);
  parallel_for(result.rows.size(), cfg.workers, [&](std::size_t slot) {
    const Psi0Method method = methods[slot / per_method];
    const std::size_t within = slot % per_method;
    const std::size_t m = m_values[within / cfg.replications];
    const std::size_t rep = within % cfg.replications;
    RandomStream rng(derive_seed(cfg.master_seed,
                                 "boundary/" + to_string(method), m, rep));
    const WeightSample sample(model.sample_weights(m, rng));
    const BoundaryEstimate est = estimate_psi0(method, sample, rule);
    result.rows[slot] =
        BoundaryRow{m, rep, method, est.psi0, std::abs(est.psi0 - truth)};
  });
  result.csv = boundary_rows_to_csv(result.rows);

  std::ostringstream line;
  line << "boundary:";
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    double err_sum = 0.0;
    for (std::size_t i = 0; i < per_method; ++i)
      err_sum += result.rows[mi * per_method + i].abs_error;
    line << " " << to_string(methods[mi]) << " mean|err|="
         << format_double(err_sum / static_cast<double>(per_method)) << ";";
  }
  result.summary_line = line.str();
  return result;
}

std::string boundary_rows_to_csv(std::span<const BoundaryRow> rows) {
  std::string out = "m,rep,method,psi0,abs_error\n";
  for (const BoundaryRow& r : rows) {
    out += std::to_string(r.m) + "," + std::to_string(r.rep) + "," +
           to_string(r.method) + "," + format_double(r.psi0) + "," +
           format_double(r.abs_error) + "\n";
  }
  return out;
}

std::vector<BoundaryRow> parse_boundary_csv(const std::string& csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() || lines[0] != "m,rep,method,psi0,abs_error")
    throw ValidationError("unexpected boundary CSV header");
  std::vector<BoundaryRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 5)
      throw ValidationError("boundary CSV row has wrong field count");
    rows.push_back(BoundaryRow{parse_u64_field(f[0]), parse_u64_field(f[1]),
                               parse_psi0_method(f[2]), parse_double_field(f[3]),
                               parse_double_field(f[4])});
  }
  return rows;
}

// ---- bench ----------------------------------------------------------------

BenchResult run_bench(const RunConfig& cfg) {
  require_replications(cfg);
  const std::vector<std::size_t> grid = grid_or_single(cfg, 4);
  for (std::size_t n : grid)
    if (n > cfg.direct_cap)
      throw SizeCapError("n = " + std::to_string(n) +
                         " exceeds the direct-solve cap " +
                         std::to_string(cfg.direct_cap));
  const WeightModel model = WeightModel::parse(cfg.model);
  const SketchConfig scfg = make_sketch_config(cfg);
  if (!scfg.cost.phi2.is_zero())
    throw ValidationError("the bench covers edge-only costs (phi2 = zero)");

  BenchResult result;
  result.rows.reserve(grid.size() * cfg.replications);
  // Timings are honest wall-clock, so trials run sequentially.
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    const std::size_t n = grid[gi];
    for (std::size_t rep = 0; rep < cfg.replications; ++rep) {
      RandomStream rng(derive_seed(cfg.master_seed, "bench", n, rep));
      const WeightedGraph source =
          WeightedGraph::complete(n, [&] { return model.sample(rng); });

      const auto direct_start = std::chrono::steady_clock::now();
      const PhiMstResult direct = phi_mst(source, scfg.cost);
      const double direct_ms = elapsed_ms(direct_start);

      const auto sketch_start = std::chrono::steady_clock::now();
      const WeightSample observed =
          observed_from_graph(source, scfg.edge_subsample_cap, rng);
      const EstimateReport report =
          estimate_avcost(scfg, observed, nullptr, n, nullptr, rng);
      const double sketch_ms = elapsed_ms(sketch_start);

      result.rows.push_back(BenchRow{n, rep, direct.cost,
                                     report.sketch_tree_cost, direct_ms,
                                     sketch_ms,
                                     sketch_ms > 0.0 ? direct_ms / sketch_ms
                                                     : 0.0});
    }
  }

  std::string csv = "n,rep,direct_cost,sketch_cost,direct_ms,sketch_ms,ratio\n";
  for (const BenchRow& r : result.rows) {
    csv += std::to_string(r.n) + "," + std::to_string(r.rep) + "," +
           format_double(r.direct_cost) + "," + format_double(r.sketch_cost) +
           "," + format_double(r.direct_ms) + "," + format_double(r.sketch_ms) +
           "," + format_double(r.ratio) + "\n";
  }
  result.csv = std::move(csv);

  std::ostringstream line;
  line << "bench:";
  for (const BenchRow& r : result.rows)
    line << " n=" << r.n << " direct_ms=" << format_double(r.direct_ms)
         << " sketch_ms=" << format_double(r.sketch_ms) << ";";
  result.summary_line = line.str();
  return result;
}

std::vector<BenchRow> parse_bench_csv(const std::string& csv) {
  const auto lines = split_lines(csv);
  if (lines.empty() ||
      lines[0] != "n,rep,direct_cost,sketch_cost,direct_ms,sketch_ms,ratio")
    throw ValidationError("unexpected bench CSV header");
  std::vector<BenchRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split_fields(lines[i]);
    if (f.size() != 7)
      throw ValidationError("bench CSV row has wrong field count");
    rows.push_back(BenchRow{parse_u64_field(f[0]), parse_u64_field(f[1]),
                            parse_double_field(f[2]), parse_double_field(f[3]),
                            parse_double_field(f[4]), parse_double_field(f[5]),
                            parse_double_field(f[6])});
  }
  return rows;
}

// ---- trial record views ----------------------------------------------------

std::vector<TrialRecord> frieze_trial_records(const FriezeResult& result) {
  std::vector<TrialRecord> records;
  records.reserve(result.rows.size());
  for (const FriezeRow& r : result.rows) {
    TrialRecord rec;
    rec.experiment = "frieze";
    rec.n = r.n;
    rec.rep = r.rep;
    rec.seed = r.seed;
    rec.quantities = {{"cost", r.cost}, {"analytic_limit", r.analytic_limit}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TrialRecord>
convergence_trial_records(const ConvergenceResult& result) {
  std::vector<TrialRecord> records;
  records.reserve(result.experiment.trials.size());
  for (const ConsistencyTrial& t : result.experiment.trials) {
    TrialRecord rec;
    rec.experiment = "convergence";
    rec.n = t.n;
    rec.rep = t.rep;
    rec.seed = t.seed;
    rec.quantities = {{"d", static_cast<double>(t.d)},
                      {"psi0", t.psi0 ? *t.psi0 : std::nan("")},
                      {"sketch_tree_cost", t.sketch_tree_cost},
                      {"direct_cost", t.direct_cost},
                      {"analytic_limit", t.analytic_limit}};
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<TrialRecord> boundary_trial_records(const BoundaryResult& result) {
  std::vector<TrialRecord> records;
  records.reserve(result.rows.size());
  for (const BoundaryRow& r : result.rows) {
    TrialRecord rec;
    rec.experiment = "boundary/" + to_string(r.method);
    rec.n = r.m;
    rec.rep = r.rep;
    rec.quantities = {{"psi0", r.psi0}, {"abs_error", r.abs_error}};
    records.push_back(std::move(rec));
  }
  return records;
}

// ---- dispatch ---------------------------------------------------------------

CommandOutput run_command(const RunConfig& cfg) {
  if (cfg.command == "frieze") {
    FriezeResult r = run_frieze(cfg);
    return CommandOutput{std::move(r.csv), std::move(r.summary_line)};
  }
  if (cfg.command == "estimate") {
    EstimateResult r = run_estimate(cfg);
    if (!cfg.tree_out.empty()) {
      std::ofstream tree(cfg.tree_out);
      if (!tree)
        throw ValidationError("cannot open tree output file: " + cfg.tree_out);
      tree << tree_to_json(r.report.tree) << "\n";
    }
    return CommandOutput{std::move(r.json), std::move(r.summary_line)};
  }
  if (cfg.command == "convergence") {
    ConvergenceResult r = run_convergence(cfg);
    return CommandOutput{std::move(r.csv), std::move(r.summary_line)};
  }
  if (cfg.command == "boundary") {
    BoundaryResult r = run_boundary(cfg);
    return CommandOutput{std::move(r.csv), std::move(r.summary_line)};
  }
  if (cfg.command == "bench") {
    BenchResult r = run_bench(cfg);
    return CommandOutput{std::move(r.csv), std::move(r.summary_line)};
  }
  throw ValidationError("unknown command `" + cfg.command +
                        "` (expected frieze | estimate | convergence | "
                        "boundary | bench)");
}

} // namespace mstsketch

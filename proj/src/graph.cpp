#include "mstsketch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "mstsketch/errors.hpp"

namespace mstsketch {

namespace {

std::string edge_str(VertexId u, VertexId v, double w) {
  std::ostringstream os;
  os << "(" << u << ", " << v << ", " << w << ")";
  return os.str();
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

} // namespace

VertexColoring::VertexColoring(std::vector<std::uint32_t> colors_in,
                               std::uint32_t k_in)
    : colors(std::move(colors_in)), k(k_in) {
  if (k == 0)
    throw ValidationError("coloring needs at least one color class");
  for (std::uint32_t c : colors)
    if (c < 1 || c > k)
      throw ValidationError("color " + std::to_string(c) +
                            " outside 1.." + std::to_string(k));
}

WeightedGraph WeightedGraph::complete(std::size_t n,
                                      const std::function<double()>& draw_weight) {
  if (n < 2)
    throw ValidationError("complete graph needs n >= 2, got n = " +
                          std::to_string(n));
  WeightedGraph g;
  g.n_ = n;
  g.complete_ = true;
  g.dense_ = true;
  g.weights_.resize(pair_count(n));
  for (double& w : g.weights_) {
    w = draw_weight();
    if (!(w >= 0.0))
      throw ValidationError("weight sampler produced a negative or NaN weight");
  }
  return g;
}

WeightedGraph WeightedGraph::from_edge_list(
    std::size_t n,
    const std::vector<std::tuple<VertexId, VertexId, double>>& raw_edges) {
  if (n < 1)
    throw ValidationError("graph needs n >= 1 vertices");
  WeightedGraph g;
  g.n_ = n;
  g.edges_.reserve(raw_edges.size());
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(raw_edges.size() * 2);
  for (const auto& [ru, rv, w] : raw_edges) {
    VertexId u = ru, v = rv;
    if (u == v)
      throw ValidationError("self-loop " + edge_str(ru, rv, w));
    if (u > v)
      std::swap(u, v);
    if (v >= n)
      throw ValidationError("endpoint out of range in " + edge_str(ru, rv, w) +
                            " for n = " + std::to_string(n));
    if (!(w >= 0.0) || !std::isfinite(w))
      throw ValidationError("negative or non-finite weight in " +
                            edge_str(ru, rv, w));
    const std::uint64_t key = (static_cast<std::uint64_t>(u) << 32) | v;
    if (!seen.insert(key).second)
      throw ValidationError("duplicate edge pair in " + edge_str(ru, rv, w));
    g.edges_.push_back(Edge{u, v, w});
  }
  g.complete_ = n >= 2 && g.edges_.size() == pair_count(n);
  return g;
}

std::size_t WeightedGraph::pair_index(VertexId u, VertexId v) const {
  if (u > v)
    std::swap(u, v);
  const std::size_t su = u;
  return su * (2 * n_ - su - 1) / 2 + (v - u - 1);
}

Edge WeightedGraph::edge(std::size_t index) const {
  if (!dense_)
    return edges_[index];
  // Invert the lexicographic pair index: row u holds n-1-u entries starting
  // at u*(2n-u-1)/2. Start from the quadratic-formula estimate and fix up.
  const double nn = static_cast<double>(n_);
  std::size_t u = static_cast<std::size_t>(
      std::floor((2.0 * nn - 1.0 -
                  std::sqrt((2.0 * nn - 1.0) * (2.0 * nn - 1.0) -
                            8.0 * static_cast<double>(index))) /
                 2.0));
  if (u >= n_ - 1)
    u = n_ - 2;
  auto row_start = [this](std::size_t r) { return r * (2 * n_ - r - 1) / 2; };
  while (u > 0 && row_start(u) > index)
    --u;
  while (row_start(u + 1) <= index)
    ++u;
  const std::size_t v = index - row_start(u) + u + 1;
  return Edge{static_cast<VertexId>(u), static_cast<VertexId>(v),
              weights_[index]};
}

bool WeightedGraph::is_connected() const {
  if (n_ <= 1)
    return true;
  if (dense_)
    return true; // complete
  std::vector<std::vector<VertexId>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> visited(n_, 0);
  std::vector<VertexId> stack{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : adj[x])
      if (!visited[y]) {
        visited[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n_;
}

namespace {

void format_double(std::ostream& out, double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.write(buf, res.ptr - buf);
}

} // namespace

WeightedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::vector<std::tuple<VertexId, VertexId, double>> raw;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag;
      ls >> tag >> n;
      if (tag != "n" || ls.fail() || n < 1)
        throw ValidationError("line " + std::to_string(lineno) +
                              ": expected header `n <count>`");
      have_header = true;
      continue;
    }
    std::uint64_t u, v;
    double w;
    ls >> u >> v >> w;
    if (ls.fail())
      throw ValidationError("line " + std::to_string(lineno) +
                            ": expected `u v weight`");
    if (u >= std::numeric_limits<VertexId>::max() ||
        v >= std::numeric_limits<VertexId>::max())
      throw ValidationError("line " + std::to_string(lineno) +
                            ": vertex id too large");
    raw.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v), w);
  }
  if (!have_header)
    throw ValidationError("missing `n <count>` header line");
  return WeightedGraph::from_edge_list(n, raw);
}

WeightedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open edge list file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const WeightedGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  g.for_each_edge([&](std::size_t, const Edge& e) {
    out << e.u << " " << e.v << " ";
    format_double(out, e.weight);
    out << "\n";
  });
}

void write_edge_list_file(const std::string& path, const WeightedGraph& g) {
  std::ofstream out(path);
  if (!out)
    throw ValidationError("cannot open output file: " + path);
  write_edge_list(out, g);
}

} // namespace mstsketch

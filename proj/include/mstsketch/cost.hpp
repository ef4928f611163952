#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mstsketch {

// Apery's constant, the limiting MST weight of a complete graph with
// Uniform(0,1) weights. Hard-coded; series evaluation buys nothing at the
// tolerances used here.
inline constexpr double kZeta3 = 1.2020569031595943;

// Strictly increasing transform applied to the tree's edge-weight sum.
// Catalog: identity, x^p with p in (0,1], ln(1+x), and c * inner.
class EdgeCostTransform {
public:
  enum class Kind { Identity, Power, Log1p, Scaled };

  static EdgeCostTransform identity();
  static EdgeCostTransform power(double exponent);
  static EdgeCostTransform log1p();
  static EdgeCostTransform scaled(double factor, EdgeCostTransform inner);

  double operator()(double total) const;

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::Identity; }

  std::string to_string() const;
  // identity | pow:p | log1p | scaled:c,<inner>
  static EdgeCostTransform parse(std::string_view spec);

private:
  EdgeCostTransform(Kind kind, double param) : kind_(kind), param_(param) {}
  Kind kind_;
  double param_ = 0.0;
  std::shared_ptr<const EdgeCostTransform> inner_;
};

// Cost contribution of the subgraph's vertices. Either identically zero or
// a linear function of the color histogram.
class VertexCostFunction {
public:
  static VertexCostFunction zero();
  static VertexCostFunction color_histogram(std::vector<double> unit_costs);

  bool is_zero() const { return unit_costs_.empty(); }
  double operator()(std::span<const std::uint32_t> colors) const;

  std::string to_string() const;
  // zero | hist:c1,c2,...
  static VertexCostFunction parse(std::string_view spec);

private:
  std::vector<double> unit_costs_; // empty means zero
};

// The decomposed subgraph cost: phi1(edge weight sum) + phi2(vertex colors).
struct CostSpec {
  EdgeCostTransform phi1 = EdgeCostTransform::identity();
  VertexCostFunction phi2 = VertexCostFunction::zero();

  double eval(double edge_weight_sum,
              std::span<const std::uint32_t> subgraph_colors) const {
    return phi1(edge_weight_sum) + phi2(subgraph_colors);
  }
};

// phi1(zeta(3) / fprime0): the analytic large-n value of the expected
// phi-MST cost of a complete graph. Requires fprime0 > 0.
double limit_value(const EdgeCostTransform& phi1, double fprime0);

} // namespace mstsketch

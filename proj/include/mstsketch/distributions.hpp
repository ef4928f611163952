#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mstsketch/graph.hpp"
#include "mstsketch/rng.hpp"

namespace mstsketch {

enum class WeightFamily { Uniform, Exponential, Weibull };

// Parametric edge-weight model on the nonnegative reals. Uniform(0,b) and
// Exponential(rate) have F(0) = 0 and a finite positive density at zero;
// Weibull with shape != 1 deliberately violates that and is carried as a
// negative control for the limit-theorem preconditions.
class WeightModel {
public:
  static WeightModel uniform(double a, double b);
  static WeightModel exponential(double rate);
  static WeightModel weibull(double shape, double scale);

  WeightFamily family() const { return family_; }
  // Uniform: b. Exponential: rate. Weibull: shape (param2 = scale).
  double param1() const { return p1_; }
  double param2() const { return p2_; }

  // Weibull with shape != 1 exists only to violate the density-at-zero
  // precondition; such models are excluded from ground-truth lookups.
  bool is_precondition_control() const;

  double sample(RandomStream& rng) const;
  std::vector<double> sample_weights(std::size_t count, RandomStream& rng) const;

  // Exact analytic CDF.
  double cdf(double x) const;

  // F'(0) ground truth. Throws PreconditionError for Weibull shape != 1
  // ("infinite density at zero" for shape < 1, "zero density at zero" for
  // shape > 1).
  double density_at_zero() const;

  double mean() const;

  std::string to_string() const;
  // Spec strings: uniform:a,b (a must be 0), exp:rate, weibull:shape,scale.
  static WeightModel parse(std::string_view spec);

  bool operator==(const WeightModel&) const = default;

private:
  WeightModel(WeightFamily f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}
  WeightFamily family_;
  double p1_;
  double p2_;
};

// Categorical distribution over colors 1..k.
class ColorModel {
public:
  explicit ColorModel(std::vector<double> probabilities);

  std::size_t k() const { return probs_.size(); }
  const std::vector<double>& probabilities() const { return probs_; }

  VertexColoring sample_coloring(std::size_t n, RandomStream& rng) const;

  std::string to_string() const;
  static ColorModel parse(std::string_view spec);

private:
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

// Relative color frequencies. With infer_k the number of classes is taken as
// the largest observed color instead of the coloring's declared k.
ColorModel empirical_pmf(const VertexColoring& coloring, bool infer_k = false);

} // namespace mstsketch

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstsketch/distributions.hpp"
#include "mstsketch/rng.hpp"

namespace mstsketch {

// Observed nonnegative weights (all edge weights of the source graph, or a
// uniform subsample of them).
class WeightSample {
public:
  explicit WeightSample(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }

private:
  std::vector<double> values_;
};

enum class Psi0Method { DifferenceQuotient, ReflectionKernel, NaiveKernel };

std::string to_string(Psi0Method method);
Psi0Method parse_psi0_method(std::string_view spec); // dq | reflect | naive

// Automatic or fixed bandwidth. The automatic rules are m^(-1/4) for the
// difference quotient (bias O(h) vs stochastic error O(1/sqrt(m h))) and
// m^(-1/5) for the kernel estimators.
struct BandwidthRule {
  static BandwidthRule automatic() { return BandwidthRule{true, 0.0}; }
  static BandwidthRule fixed(double h);

  double resolve(std::size_t m, double auto_exponent) const;

  bool is_auto = true;
  double value = 0.0;
};

// An estimate of F'(0) with the bandwidth it used.
struct BoundaryEstimate {
  double psi0 = 0.0;
  double bandwidth = 0.0;
  Psi0Method method = Psi0Method::DifferenceQuotient;
};

// Epanechnikov kernel 3/4 (1 - u^2) on [-1, 1].
double epanechnikov(double u);

// psi0 = #{x_i <= h} / (m h): the empirical CDF slope at the boundary.
BoundaryEstimate difference_quotient_psi0(
    const WeightSample& sample, BandwidthRule rule = BandwidthRule::automatic());

// psi0 = 2/(m h) * sum K(x_i / h): kernel density at 0 with the mass-doubling
// reflection correction for the support boundary.
BoundaryEstimate reflection_kernel_psi0(
    const WeightSample& sample, BandwidthRule rule = BandwidthRule::automatic());

// The uncorrected kernel density at 0. Converges to F'(0)/2, not F'(0);
// shipped as a negative control for the boundary-bias effect.
BoundaryEstimate naive_kernel_psi0(const WeightSample& sample, double bandwidth);

// Dispatch by method tag; the naive kernel resolves the rule at the standard
// kernel exponent.
BoundaryEstimate estimate_psi0(Psi0Method method, const WeightSample& sample,
                               BandwidthRule rule = BandwidthRule::automatic());

// Sampleable stand-in for the estimated edge-weight distribution: the plain
// bootstrap of the observed sample, or the bootstrap smoothed with scaled
// kernel noise and reflected at 0.
class ResamplingModel {
public:
  static ResamplingModel bootstrap(WeightSample source);
  static ResamplingModel smoothed_bootstrap(WeightSample source, double bandwidth);

  double draw(RandomStream& rng) const;
  std::vector<double> resample(std::size_t count, RandomStream& rng) const;

  bool is_smoothed() const { return smoothed_; }
  double bandwidth() const { return bandwidth_; }
  const WeightSample& source() const { return source_; }

private:
  ResamplingModel(WeightSample source, bool smoothed, double bandwidth);
  WeightSample source_;
  bool smoothed_;
  double bandwidth_;
};

struct ConvergenceStudyTrial {
  std::size_t m = 0;
  std::size_t rep = 0;
  double psi0 = 0.0;
  double abs_error = 0.0;
};

struct ConvergenceStudyRow {
  std::size_t m = 0;
  double mean_abs_error = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceStudyRow> rows;
  std::vector<ConvergenceStudyTrial> trials;
};

// Mean absolute estimation error |psi0 - F'(0)| as the sample size grows.
// For boundary-respecting estimators the error column decays; for the naive
// kernel it plateaus near F'(0)/2.
ConvergenceStudy boundary_convergence_study(const WeightModel& model,
                                            std::span<const std::size_t> m_grid,
                                            std::size_t replications,
                                            Psi0Method method,
                                            RandomStream& rng);

} // namespace mstsketch

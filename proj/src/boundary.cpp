#include "mstsketch/boundary.hpp"

#include <cmath>

#include "mstsketch/errors.hpp"

namespace mstsketch {

namespace {

constexpr double kDifferenceQuotientExponent = -0.25;
constexpr double kKernelExponent = -0.2;

} // namespace

WeightSample::WeightSample(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty())
    throw ValidationError("weight sample must be nonempty");
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ValidationError("weight sample values must be finite and >= 0");
}

std::string to_string(Psi0Method method) {
  switch (method) {
  case Psi0Method::DifferenceQuotient:
    return "difference-quotient";
  case Psi0Method::ReflectionKernel:
    return "reflection-kernel";
  case Psi0Method::NaiveKernel:
    return "naive-kernel";
  }
  return {};
}

Psi0Method parse_psi0_method(std::string_view spec) {
  if (spec == "dq" || spec == "difference-quotient")
    return Psi0Method::DifferenceQuotient;
  if (spec == "reflect" || spec == "reflection-kernel")
    return Psi0Method::ReflectionKernel;
  if (spec == "naive" || spec == "naive-kernel")
    return Psi0Method::NaiveKernel;
  throw ValidationError("unknown psi0 method `" + std::string(spec) +
                        "` (expected dq | reflect | naive)");
}

BandwidthRule BandwidthRule::fixed(double h) {
  if (!(h > 0.0))
    throw ValidationError("bandwidth must be positive");
  return BandwidthRule{false, h};
}

double BandwidthRule::resolve(std::size_t m, double auto_exponent) const {
  if (!is_auto)
    return value;
  return std::pow(static_cast<double>(m), auto_exponent);
}

double epanechnikov(double u) {
  return std::abs(u) <= 1.0 ? 0.75 * (1.0 - u * u) : 0.0;
}

namespace {

void require_estimator_sample(const WeightSample& sample) {
  if (sample.size() < 2)
    throw PreconditionError("boundary estimators need a sample of size >= 2");
}

} // namespace

BoundaryEstimate difference_quotient_psi0(const WeightSample& sample,
                                          BandwidthRule rule) {
  require_estimator_sample(sample);
  const std::size_t m = sample.size();
  const double h = rule.resolve(m, kDifferenceQuotientExponent);
  std::size_t count = 0;
  for (double v : sample.values())
    if (v <= h)
      ++count;
  if (count == 0)
    throw PreconditionError(
        "degenerate sample: no mass in [0, h]; the boundary slope estimate "
        "would be 0 while F'(0) > 0 is required");
  const double psi0 =
      static_cast<double>(count) / (static_cast<double>(m) * h);
  return BoundaryEstimate{psi0, h, Psi0Method::DifferenceQuotient};
}

namespace {

double kernel_sum(const WeightSample& sample, double h) {
  double sum = 0.0;
  for (double v : sample.values())
    sum += epanechnikov(v / h);
  return sum;
}

} // namespace

BoundaryEstimate reflection_kernel_psi0(const WeightSample& sample,
                                        BandwidthRule rule) {
  require_estimator_sample(sample);
  const std::size_t m = sample.size();
  const double h = rule.resolve(m, kKernelExponent);
  const double sum = kernel_sum(sample, h);
  if (sum == 0.0)
    throw PreconditionError(
        "degenerate sample: no observation within the kernel support [0, h]");
  const double psi0 = 2.0 * sum / (static_cast<double>(m) * h);
  return BoundaryEstimate{psi0, h, Psi0Method::ReflectionKernel};
}

BoundaryEstimate naive_kernel_psi0(const WeightSample& sample,
                                   double bandwidth) {
  require_estimator_sample(sample);
  if (!(bandwidth > 0.0))
    throw ValidationError("bandwidth must be positive");
  const std::size_t m = sample.size();
  const double sum = kernel_sum(sample, bandwidth);
  if (sum == 0.0)
    throw PreconditionError(
        "degenerate sample: no observation within the kernel support [0, h]");
  const double psi0 = sum / (static_cast<double>(m) * bandwidth);
  return BoundaryEstimate{psi0, bandwidth, Psi0Method::NaiveKernel};
}

BoundaryEstimate estimate_psi0(Psi0Method method, const WeightSample& sample,
                               BandwidthRule rule) {
  switch (method) {
  case Psi0Method::DifferenceQuotient:
    return difference_quotient_psi0(sample, rule);
  case Psi0Method::ReflectionKernel:
    return reflection_kernel_psi0(sample, rule);
  case Psi0Method::NaiveKernel:
    return naive_kernel_psi0(sample,
                             rule.resolve(sample.size(), kKernelExponent));
  }
  throw ValidationError("unknown psi0 method");
}

ResamplingModel::ResamplingModel(WeightSample source, bool smoothed,
                                 double bandwidth)
    : source_(std::move(source)), smoothed_(smoothed), bandwidth_(bandwidth) {}

ResamplingModel ResamplingModel::bootstrap(WeightSample source) {
  return ResamplingModel(std::move(source), false, 0.0);
}

ResamplingModel ResamplingModel::smoothed_bootstrap(WeightSample source,
                                                    double bandwidth) {
  if (!(bandwidth > 0.0))
    throw ValidationError("smoothed bootstrap bandwidth must be positive");
  return ResamplingModel(std::move(source), true, bandwidth);
}

double ResamplingModel::draw(RandomStream& rng) const {
  const auto& values = source_.values();
  const double base = values[rng.below(values.size())];
  if (!smoothed_)
    return base;
  // Epanechnikov noise via the three-uniform selection rule, then reflect
  // at the support boundary.
  const double u1 = 2.0 * rng.uniform01() - 1.0;
  const double u2 = 2.0 * rng.uniform01() - 1.0;
  const double u3 = 2.0 * rng.uniform01() - 1.0;
  const double eps =
      (std::abs(u3) >= std::abs(u2) && std::abs(u3) >= std::abs(u1)) ? u2 : u3;
  const double x = base + bandwidth_ * eps;
  return x < 0.0 ? -x : x;
}

std::vector<double> ResamplingModel::resample(std::size_t count,
                                              RandomStream& rng) const {
  std::vector<double> out(count);
  for (double& x : out)
    x = draw(rng);
  return out;
}

ConvergenceStudy boundary_convergence_study(const WeightModel& model,
                                            std::span<const std::size_t> m_grid,
                                            std::size_t replications,
                                            Psi0Method method,
                                            RandomStream& rng) {
  const double truth = model.density_at_zero();
  ConvergenceStudy study;
  if (replications == 0)
    return study;
  for (std::size_t m : m_grid) {
    double error_sum = 0.0;
    for (std::size_t rep = 0; rep < replications; ++rep) {
      WeightSample sample(model.sample_weights(m, rng));
      const BoundaryEstimate est = estimate_psi0(method, sample);
      const double err = std::abs(est.psi0 - truth);
      error_sum += err;
      study.trials.push_back(ConvergenceStudyTrial{m, rep, est.psi0, err});
    }
    study.rows.push_back(
        ConvergenceStudyRow{m, error_sum / static_cast<double>(replications)});
  }
  return study;
}

} // namespace mstsketch

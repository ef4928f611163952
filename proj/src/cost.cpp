#include "mstsketch/cost.hpp"

#include <cmath>
#include <sstream>

#include "mstsketch/errors.hpp"

namespace mstsketch {

namespace {

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

double parse_number(std::string_view s, std::string_view what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(std::string(s), &pos);
    if (pos != s.size())
      throw std::invalid_argument("trailing junk");
    return v;
  } catch (const std::exception&) {
    throw ValidationError("cannot parse " + std::string(what) + " from `" +
                          std::string(s) + "`");
  }
}

} // namespace

EdgeCostTransform EdgeCostTransform::identity() {
  return EdgeCostTransform(Kind::Identity, 0.0);
}

EdgeCostTransform EdgeCostTransform::power(double exponent) {
  if (!(exponent > 0.0) || exponent > 1.0)
    throw ValidationError("power transform requires exponent in (0, 1]");
  return EdgeCostTransform(Kind::Power, exponent);
}

EdgeCostTransform EdgeCostTransform::log1p() {
  return EdgeCostTransform(Kind::Log1p, 0.0);
}

EdgeCostTransform EdgeCostTransform::scaled(double factor,
                                            EdgeCostTransform inner) {
  if (!(factor > 0.0))
    throw ValidationError("scaled transform requires factor > 0");
  EdgeCostTransform t(Kind::Scaled, factor);
  t.inner_ = std::make_shared<const EdgeCostTransform>(std::move(inner));
  return t;
}

double EdgeCostTransform::operator()(double total) const {
  switch (kind_) {
  case Kind::Identity:
    return total;
  case Kind::Power:
    return std::pow(total, param_);
  case Kind::Log1p:
    return std::log1p(total);
  case Kind::Scaled:
    return param_ * (*inner_)(total);
  }
  return total;
}

std::string EdgeCostTransform::to_string() const {
  switch (kind_) {
  case Kind::Identity:
    return "identity";
  case Kind::Power:
    return "pow:" + format_param(param_);
  case Kind::Log1p:
    return "log1p";
  case Kind::Scaled:
    return "scaled:" + format_param(param_) + "," + inner_->to_string();
  }
  return {};
}

EdgeCostTransform EdgeCostTransform::parse(std::string_view spec) {
  if (spec == "identity")
    return identity();
  if (spec == "log1p")
    return log1p();
  if (spec.substr(0, 4) == "pow:")
    return power(parse_number(spec.substr(4), "power exponent"));
  if (spec.substr(0, 7) == "scaled:") {
    const std::string_view args = spec.substr(7);
    const std::size_t comma = args.find(',');
    if (comma == std::string_view::npos)
      throw ValidationError("scaled transform expects `scaled:c,<inner>`");
    return scaled(parse_number(args.substr(0, comma), "scale factor"),
                  parse(args.substr(comma + 1)));
  }
  throw ValidationError("unknown edge cost transform `" + std::string(spec) +
                        "` (expected identity | pow:p | log1p | scaled:c,<inner>)");
}

VertexCostFunction VertexCostFunction::zero() { return VertexCostFunction{}; }

VertexCostFunction
VertexCostFunction::color_histogram(std::vector<double> unit_costs) {
  if (unit_costs.empty())
    throw ValidationError("color histogram cost needs at least one class");
  for (double c : unit_costs)
    if (!(c >= 0.0))
      throw ValidationError("color histogram costs must be nonnegative");
  VertexCostFunction f;
  f.unit_costs_ = std::move(unit_costs);
  return f;
}

double VertexCostFunction::operator()(
    std::span<const std::uint32_t> colors) const {
  if (unit_costs_.empty())
    return 0.0;
  double total = 0.0;
  for (std::uint32_t c : colors) {
    if (c < 1 || c > unit_costs_.size())
      throw ValidationError("color " + std::to_string(c) +
                            " outside 1.." + std::to_string(unit_costs_.size()));
    total += unit_costs_[c - 1];
  }
  return total;
}

std::string VertexCostFunction::to_string() const {
  if (unit_costs_.empty())
    return "zero";
  std::string out = "hist:";
  for (std::size_t i = 0; i < unit_costs_.size(); ++i) {
    if (i)
      out += ",";
    out += format_param(unit_costs_[i]);
  }
  return out;
}

VertexCostFunction VertexCostFunction::parse(std::string_view spec) {
  if (spec == "zero")
    return zero();
  if (spec.substr(0, 5) == "hist:") {
    std::vector<double> costs;
    std::string_view args = spec.substr(5);
    while (true) {
      const std::size_t comma = args.find(',');
      costs.push_back(parse_number(args.substr(0, comma), "histogram cost"));
      if (comma == std::string_view::npos)
        break;
      args = args.substr(comma + 1);
    }
    return color_histogram(std::move(costs));
  }
  throw ValidationError("unknown vertex cost `" + std::string(spec) +
                        "` (expected zero | hist:c1,c2,...)");
}

double limit_value(const EdgeCostTransform& phi1, double fprime0) {
  if (!(fprime0 > 0.0))
    throw ValidationError("limit value requires F'(0) > 0");
  return phi1(kZeta3 / fprime0);
}

} // namespace mstsketch

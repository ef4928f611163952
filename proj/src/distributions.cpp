#include "mstsketch/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mstsketch/errors.hpp"

namespace mstsketch {

namespace {

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

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string format_param(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

} // namespace

WeightModel WeightModel::uniform(double a, double b) {
  if (a != 0.0)
    throw ValidationError("uniform weight model requires a = 0 (support must "
                          "start at the boundary), got a = " + format_param(a));
  if (!(b > 0.0))
    throw ValidationError("uniform weight model requires b > 0");
  return WeightModel(WeightFamily::Uniform, b, 0.0);
}

WeightModel WeightModel::exponential(double rate) {
  if (!(rate > 0.0))
    throw ValidationError("exponential weight model requires rate > 0");
  return WeightModel(WeightFamily::Exponential, rate, 0.0);
}

WeightModel WeightModel::weibull(double shape, double scale) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw ValidationError("weibull weight model requires shape > 0, scale > 0");
  return WeightModel(WeightFamily::Weibull, shape, scale);
}

bool WeightModel::is_precondition_control() const {
  return family_ == WeightFamily::Weibull && p1_ != 1.0;
}

double WeightModel::sample(RandomStream& rng) const {
  const double u = rng.uniform01();
  switch (family_) {
  case WeightFamily::Uniform:
    return p1_ * u;
  case WeightFamily::Exponential:
    return -std::log1p(-u) / p1_;
  case WeightFamily::Weibull:
    return p2_ * std::pow(-std::log1p(-u), 1.0 / p1_);
  }
  return 0.0;
}

std::vector<double> WeightModel::sample_weights(std::size_t count,
                                                RandomStream& rng) const {
  std::vector<double> out(count);
  for (double& x : out)
    x = sample(rng);
  return out;
}

double WeightModel::cdf(double x) const {
  if (x <= 0.0)
    return 0.0;
  switch (family_) {
  case WeightFamily::Uniform:
    return x >= p1_ ? 1.0 : x / p1_;
  case WeightFamily::Exponential:
    return -std::expm1(-p1_ * x);
  case WeightFamily::Weibull:
    return -std::expm1(-std::pow(x / p2_, p1_));
  }
  return 0.0;
}

double WeightModel::density_at_zero() const {
  switch (family_) {
  case WeightFamily::Uniform:
    return 1.0 / p1_;
  case WeightFamily::Exponential:
    return p1_;
  case WeightFamily::Weibull:
    if (p1_ < 1.0)
      throw PreconditionError("weibull shape < 1: infinite density at zero");
    if (p1_ > 1.0)
      throw PreconditionError("weibull shape > 1: zero density at zero");
    return 1.0 / p2_;
  }
  return 0.0;
}

double WeightModel::mean() const {
  switch (family_) {
  case WeightFamily::Uniform:
    return p1_ / 2.0;
  case WeightFamily::Exponential:
    return 1.0 / p1_;
  case WeightFamily::Weibull:
    return p2_ * std::tgamma(1.0 + 1.0 / p1_);
  }
  return 0.0;
}

std::string WeightModel::to_string() const {
  switch (family_) {
  case WeightFamily::Uniform:
    return "uniform:0," + format_param(p1_);
  case WeightFamily::Exponential:
    return "exp:" + format_param(p1_);
  case WeightFamily::Weibull:
    return "weibull:" + format_param(p1_) + "," + format_param(p2_);
  }
  return {};
}

WeightModel WeightModel::parse(std::string_view spec) {
  const std::size_t colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  if (head == "uniform") {
    const auto parts = split(args, ',');
    if (parts.size() != 2)
      throw ValidationError("uniform model expects `uniform:a,b`");
    return uniform(parse_number(parts[0], "uniform a"),
                   parse_number(parts[1], "uniform b"));
  }
  if (head == "exp") {
    return exponential(parse_number(args, "exponential rate"));
  }
  if (head == "weibull") {
    const auto parts = split(args, ',');
    if (parts.size() != 2)
      throw ValidationError("weibull model expects `weibull:shape,scale`");
    return weibull(parse_number(parts[0], "weibull shape"),
                   parse_number(parts[1], "weibull scale"));
  }
  throw ValidationError("unknown weight model `" + std::string(spec) +
                        "` (expected uniform:a,b | exp:rate | weibull:shape,scale)");
}

ColorModel::ColorModel(std::vector<double> probabilities)
    : probs_(std::move(probabilities)) {
  if (probs_.empty())
    throw ValidationError("color model needs k >= 1 classes");
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0))
      throw ValidationError("color probabilities must be nonnegative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ValidationError("color probabilities must sum to 1 (got " +
                          format_param(total) + ")");
  cumulative_.resize(probs_.size());
  std::partial_sum(probs_.begin(), probs_.end(), cumulative_.begin());
  cumulative_.back() = 1.0;
}

VertexColoring ColorModel::sample_coloring(std::size_t n,
                                           RandomStream& rng) const {
  if (n < 1)
    throw ValidationError("coloring needs n >= 1 vertices");
  std::vector<std::uint32_t> colors(n);
  for (std::uint32_t& c : colors) {
    const double u = rng.uniform01();
    const auto it =
        std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t idx = std::min<std::size_t>(
        static_cast<std::size_t>(it - cumulative_.begin()), probs_.size() - 1);
    c = static_cast<std::uint32_t>(idx + 1);
  }
  return VertexColoring(std::move(colors), static_cast<std::uint32_t>(k()));
}

std::string ColorModel::to_string() const {
  std::string out = "colors:";
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (i)
      out += ",";
    out += format_param(probs_[i]);
  }
  return out;
}

ColorModel ColorModel::parse(std::string_view spec) {
  std::string_view args = spec;
  if (args.substr(0, 7) == "colors:")
    args = args.substr(7);
  std::vector<double> probs;
  for (std::string_view part : split(args, ','))
    probs.push_back(parse_number(part, "color probability"));
  return ColorModel(std::move(probs));
}

ColorModel empirical_pmf(const VertexColoring& coloring, bool infer_k) {
  if (coloring.size() < 1)
    throw ValidationError("empirical pmf needs at least one vertex");
  std::uint32_t k = coloring.k;
  if (infer_k) {
    k = 1;
    for (std::uint32_t c : coloring.colors)
      k = std::max(k, c);
  }
  std::vector<double> counts(k, 0.0);
  for (std::uint32_t c : coloring.colors)
    counts[c - 1] += 1.0;
  const double n = static_cast<double>(coloring.size());
  for (double& c : counts)
    c /= n;
  return ColorModel(std::move(counts));
}

} // namespace mstsketch

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mstsketch/distributions.hpp"
#include "mstsketch/errors.hpp"

using namespace mstsketch;

TEST_CASE("sample_weights basics") {
  RandomStream rng(1);
  const WeightModel uniform = WeightModel::uniform(0, 2);
  CHECK(uniform.sample_weights(0, rng).empty());

  const auto draws = uniform.sample_weights(100'000, rng);
  const auto [lo, hi] = std::minmax_element(draws.begin(), draws.end());
  CHECK(*lo >= 0.0);
  CHECK(*hi < 2.0);
}

TEST_CASE("seeded exponential sample mean is near 1") {
  RandomStream rng(20240617);
  const auto draws = WeightModel::exponential(1.0).sample_weights(1'000'000, rng);
  double sum = 0.0;
  for (double x : draws)
    sum += x;
  const double mean = sum / static_cast<double>(draws.size());
  CHECK(mean > 0.99);
  CHECK(mean < 1.01);
}

TEST_CASE("analytic cdf values") {
  CHECK(WeightModel::uniform(0, 2).cdf(1.0) == 0.5);
  CHECK(WeightModel::exponential(2.0).cdf(0.0) == 0.0);
  CHECK(WeightModel::exponential(1.0).cdf(std::log(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cdf vanishes on the nonpositive axis and is nondecreasing") {
  const WeightModel models[] = {WeightModel::uniform(0, 1),
                                WeightModel::exponential(3.0),
                                WeightModel::weibull(2.0, 1.0),
                                WeightModel::weibull(0.5, 2.0)};
  for (const WeightModel& model : models) {
    CHECK(model.cdf(0.0) == 0.0);
    CHECK(model.cdf(-1.5) == 0.0);
    double prev = 0.0;
    for (int i = 0; i <= 200; ++i) {
      const double x = -1.0 + 0.05 * i;
      const double c = model.cdf(x);
      CHECK(c >= prev);
      CHECK(c >= 0.0);
      CHECK(c <= 1.0);
      prev = c;
    }
  }
}

TEST_CASE("empirical cdf tracks the analytic cdf at DKW scale") {
  const WeightModel models[] = {WeightModel::uniform(0, 1),
                                WeightModel::exponential(1.0)};
  std::uint64_t seed = 5;
  for (const WeightModel& model : models) {
    RandomStream rng(seed++);
    auto draws = model.sample_weights(1'000'000, rng);
    std::sort(draws.begin(), draws.end());
    const double hi = draws.back();
    double worst = 0.0;
    for (int i = 1; i <= 100; ++i) {
      const double x = hi * i / 100.0;
      const auto it = std::upper_bound(draws.begin(), draws.end(), x);
      const double ecdf = static_cast<double>(it - draws.begin()) /
                          static_cast<double>(draws.size());
      worst = std::max(worst, std::abs(ecdf - model.cdf(x)));
    }
    CHECK(worst < 0.005);
  }
}

TEST_CASE("density at zero") {
  CHECK(WeightModel::uniform(0, 1).density_at_zero() == 1.0);
  CHECK(WeightModel::exponential(3.0).density_at_zero() == 3.0);
  CHECK_THROWS_WITH_AS(WeightModel::weibull(2.0, 1.0).density_at_zero(),
                       doctest::Contains("zero density at zero"),
                       PreconditionError);
  CHECK_THROWS_WITH_AS(WeightModel::weibull(0.5, 1.0).density_at_zero(),
                       doctest::Contains("infinite density at zero"),
                       PreconditionError);
  // Shape 1 is just an exponential; not a control.
  CHECK(WeightModel::weibull(1.0, 2.0).density_at_zero() == 0.5);
  CHECK(WeightModel::weibull(2.0, 1.0).is_precondition_control());
  CHECK_FALSE(WeightModel::weibull(1.0, 1.0).is_precondition_control());
}

TEST_CASE("model spec strings round-trip") {
  const char* specs[] = {"uniform:0,1", "uniform:0,2.5", "exp:2",
                         "weibull:2,1", "weibull:0.5,3"};
  for (const char* spec : specs) {
    const WeightModel model = WeightModel::parse(spec);
    CHECK(WeightModel::parse(model.to_string()) == model);
  }
  CHECK_THROWS_AS(WeightModel::parse("uniform:1,2"), ValidationError);
  CHECK_THROWS_AS(WeightModel::parse("normal:0,1"), ValidationError);
  CHECK_THROWS_AS(WeightModel::parse("exp:-1"), ValidationError);
}

TEST_CASE("degenerate colorings") {
  RandomStream rng(3);
  const auto ones = ColorModel({1.0}).sample_coloring(5, rng);
  CHECK(ones.k == 1);
  for (std::uint32_t c : ones.colors)
    CHECK(c == 1);

  const auto forced = ColorModel({1.0, 0.0}).sample_coloring(3, rng);
  CHECK(forced.colors == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("seeded two-color fraction concentrates") {
  RandomStream rng(17);
  const auto coloring = ColorModel({0.5, 0.5}).sample_coloring(100'000, rng);
  std::size_t ones = 0;
  for (std::uint32_t c : coloring.colors)
    ones += c == 1;
  const double frac = static_cast<double>(ones) / 100'000.0;
  CHECK(frac > 0.49);
  CHECK(frac < 0.51);
}

TEST_CASE("color model validation") {
  CHECK_THROWS_AS(ColorModel({0.5, 0.6}), ValidationError);
  CHECK_THROWS_AS(ColorModel({-0.1, 1.1}), ValidationError);
  CHECK_THROWS_AS(ColorModel(std::vector<double>{}), ValidationError);
}

TEST_CASE("empirical pmf counts relative frequencies") {
  const VertexColoring coloring({1, 1, 2, 3}, 3);
  const ColorModel pmf = empirical_pmf(coloring);
  CHECK(pmf.probabilities() == std::vector<double>{0.5, 0.25, 0.25});

  const VertexColoring twos({2, 2}, 2);
  CHECK(empirical_pmf(twos).probabilities() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("empirical pmf can infer the number of classes") {
  const VertexColoring coloring({1, 2, 2}, 5);
  CHECK(empirical_pmf(coloring).k() == 5);
  CHECK(empirical_pmf(coloring, /*infer_k=*/true).k() == 2);
}

TEST_CASE("empirical pmf sums to 1 and concentrates at the sub-Gaussian rate") {
  const ColorModel model({0.1, 0.2, 0.3, 0.4});
  const std::size_t n = 2000;
  const double bound =
      3.0 * std::sqrt(std::log(static_cast<double>(model.k())) /
                      static_cast<double>(n));
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomStream rng(1000 + seed);
    const ColorModel pmf = empirical_pmf(model.sample_coloring(n, rng));
    double total = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < pmf.k(); ++i) {
      total += pmf.probabilities()[i];
      worst = std::max(worst,
                       std::abs(pmf.probabilities()[i] -
                                model.probabilities()[i]));
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
    failures += worst >= bound;
  }
  CHECK(failures <= 1);
}

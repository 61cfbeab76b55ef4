#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "mcs/metrics.hpp"

using namespace mcs;

TEST_CASE("rmse basics") {
  CHECK(rmse({{"a", 5, 5}, {"b", -3, -3}}) == 0.0);
  CHECK(rmse({{"a", 3, 0}, {"b", 0, 4}}) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
  CHECK(rmse({{"a", 10, 3}}) == doctest::Approx(7.0));
  CHECK_THROWS_AS(rmse({}), std::domain_error);
}

TEST_CASE("rmse is permutation invariant and nonnegative") {
  std::vector<MetricSample> s = {{"a", 1, 2}, {"b", 5, 3}, {"c", -1, 4}};
  std::vector<MetricSample> p = {s[2], s[0], s[1]};
  CHECK(rmse(s) == doctest::Approx(rmse(p)).epsilon(1e-15));
  CHECK(rmse(s) > 0.0);
}

TEST_CASE("perfect estimate scores unit quality") {
  CHECK(data_quality({"a", 12.5, 12.5}, {10.0}) == 1.0);
}

TEST_CASE("hand-worked quality at unit relative error") {
  // lambda=10, q=1: 1 - (1/1.1 - 0.5)*2.
  double expected = 1.0 - (1.0 / 1.1 - 0.5) * 2.0;
  CHECK(data_quality({"a", 10.0, 20.0}, {10.0}) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.1818).epsilon(1e-3));
}

TEST_CASE("quality vanishes as relative error grows") {
  CHECK(data_quality({"a", 1.0, 1e9}, {10.0}) < 1e-6);
}

TEST_CASE("zero estimate is rejected") {
  CHECK_THROWS_AS(data_quality({"a", 0.0, 5.0}, {10.0}), std::domain_error);
}

TEST_CASE("quality stays in the unit interval on the grid") {
  for (double lambda : {10.0, 20.0, 30.0, 40.0}) {
    for (double q = 0.0; q <= 50.0; q += 0.5) {
      double v = data_quality({"a", 1.0, 1.0 + q}, {lambda});
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("quality is strictly decreasing until it underflows to zero") {
  for (double lambda : {10.0, 20.0, 30.0, 40.0}) {
    double prev = 2.0;
    for (int i = 0; i < 1000; ++i) {
      double q = i * 0.01;
      double v = data_quality({"a", 1.0, 1.0 + q}, {lambda});
      // Large q drives the score to within a few ulps of its limit 0, where
      // cancellation quantizes it; demand strictness only above that level.
      CHECK(v <= prev);
      if (prev > 1e-12) CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("larger lambda is more sensitive pointwise") {
  for (double q = 0.05; q <= 5.0; q += 0.05) {
    double q10 = data_quality({"a", 1.0, 1.0 + q}, {10.0});
    double q40 = data_quality({"a", 1.0, 1.0 + q}, {40.0});
    CHECK(q40 < q10);
  }
}

TEST_CASE("mean quality averages and reports exclusions") {
  std::vector<MetricSample> s = {{"a", 5, 5}, {"b", 1, 1e9}, {"c", 0, 3}};
  QualitySummary out = mean_quality(s, {10.0});
  CHECK(out.counted == 2);
  CHECK(out.excluded == 1);
  CHECK(out.mean_quality == doctest::Approx(0.5).epsilon(1e-6));  // ~ (1 + 0) / 2
  CHECK(mean_quality({{"a", 2, 2}, {"b", 3, 3}}, {10.0}).mean_quality == 1.0);
}

TEST_CASE("mean quality equals independent re-evaluation") {
  std::vector<MetricSample> s;
  for (int i = 1; i <= 50; ++i) {
    s.push_back({"t" + std::to_string(i), 10.0 + i * 0.3, 10.0 - i * 0.1});
  }
  QualitySummary out = mean_quality(s, {10.0});
  double sum = 0.0;
  for (const MetricSample& m : s) sum += data_quality(m, {10.0});
  CHECK(out.mean_quality == doctest::Approx(sum / s.size()).epsilon(1e-12));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "mcs/rng.hpp"
#include "mcs/truth_discovery.hpp"

using namespace mcs;

namespace {

std::vector<Observation> make_obs(const std::vector<double>& values,
                                  const std::vector<double>& reps) {
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    obs.push_back({"w" + std::to_string(i), values[i], reps[i]});
  }
  return obs;
}

}  // namespace

TEST_CASE("mean basics") {
  CHECK(mean({5}) == 5);
  CHECK(mean({10, 10, 20}) == doctest::Approx(13.333333333333).epsilon(1e-12));
  CHECK(mean({-1, 1}) == 0);
  CHECK_THROWS_AS(mean({}), std::domain_error);
}

TEST_CASE("median basics") {
  CHECK(median({1, 2, 100}) == 2);
  CHECK(median({1, 3}) == 2);  // even count: mean of the middles
  CHECK(median({7, 7, 7, 7}) == 7);
  CHECK_THROWS_AS(median({}), std::domain_error);
}

TEST_CASE("weighted mean basics") {
  CHECK(weighted_mean(make_obs({10, 20}, {1, 3})) == 17.5);
  CHECK(weighted_mean(make_obs({3, 9, 6}, {0.4, 0.4, 0.4})) ==
        doctest::Approx(6.0).epsilon(1e-12));
  CHECK(weighted_mean(make_obs({10, 99}, {1, 0})) == 10);  // zero weight excluded
  CHECK_THROWS_AS(weighted_mean(make_obs({1, 2}, {0, 0})), std::domain_error);
}

TEST_CASE("uniform-weight iteration matches the hand-worked single step") {
  IterationConfig cfg;
  cfg.max_iters = 1;
  std::vector<double> x = {10, 10, 20};
  AggregationResult r = crh(x, cfg, default_init(x));
  CHECK(r.estimate == doctest::Approx(12.0).epsilon(1e-12));
  CHECK(r.iterations == 1);
  CHECK_FALSE(r.converged);
}

TEST_CASE("constant inputs converge immediately to the constant") {
  IterationConfig cfg;
  AggregationResult r = crh({7, 7, 7}, cfg, default_init({7, 7, 7}));
  CHECK(r.estimate == 7);
  CHECK(r.converged);
}

TEST_CASE("all-zero inputs settle at zero") {
  IterationConfig cfg;
  AggregationResult r = crh({0, 0}, cfg, default_init({0, 0}));
  CHECK(r.estimate == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("reputation-weighted single step matches the hand-worked value") {
  IterationConfig cfg;
  cfg.max_iters = 1;
  AggregationResult r = rtd(make_obs({10, 20}, {0.9, 0.1}), cfg, 15.0);
  CHECK(r.estimate == doctest::Approx(11.0).epsilon(1e-12));
}

TEST_CASE("full trust on one worker drives the estimate to that worker") {
  IterationConfig cfg;
  AggregationResult r = rtd(make_obs({10, 20}, {1.0, 0.0}), cfg, 15.0);
  CHECK(std::abs(r.estimate - 10.0) < 0.5);
}

TEST_CASE("reputations outside the unit interval are rejected") {
  IterationConfig cfg;
  CHECK_THROWS_AS(rtd(make_obs({1, 2}, {0.5, 1.5}), cfg, 1.5), std::domain_error);
  CHECK_THROWS_AS(rtd(make_obs({1, 2}, {-0.1, 0.5}), cfg, 1.5), std::domain_error);
}

TEST_CASE("uniform reputations reduce to the unweighted iteration") {
  Rng rng(1);
  IterationConfig cfg;
  for (int trial = 0; trial < 200; ++trial) {
    int k = static_cast<int>(rng.uniform_int(2, 12));
    std::vector<double> x;
    for (int i = 0; i < k; ++i) x.push_back(rng.uniform(-50, 50));
    double kappa = rng.uniform(0.05, 1.0);
    AggregationResult a = crh(x, cfg, default_init(x));
    AggregationResult b = rtd(make_obs(x, std::vector<double>(x.size(), kappa)), cfg,
                              default_init(x));
    CHECK(a.estimate == doctest::Approx(b.estimate).epsilon(1e-12));
    CHECK(a.iterations == b.iterations);
  }
}

TEST_CASE("weights are nonnegative and estimates stay in the convex hull") {
  Rng rng(2);
  IterationConfig cfg;
  for (int trial = 0; trial < 500; ++trial) {
    int k = static_cast<int>(rng.uniform_int(2, 30));
    std::vector<double> x, c;
    for (int i = 0; i < k; ++i) {
      x.push_back(rng.uniform(-100, 100));
      c.push_back(rng.uniform(0.0, 1.0));
    }
    AggregationResult r = rtd(make_obs(x, c), cfg, default_init(x));
    double lo = *std::min_element(x.begin(), x.end());
    double hi = *std::max_element(x.begin(), x.end());
    CHECK(r.estimate >= lo - 1e-9);
    CHECK(r.estimate <= hi + 1e-9);
    for (Eigen::Index i = 0; i < r.weights.size(); ++i) CHECK(r.weights(i) >= 0.0);
  }
}

TEST_CASE("random instances converge before the iteration cap") {
  Rng rng(3);
  IterationConfig cfg;
  for (int trial = 0; trial < 1000; ++trial) {
    int k = static_cast<int>(rng.uniform_int(2, 30));
    std::vector<double> x, c;
    for (int i = 0; i < k; ++i) {
      x.push_back(rng.uniform(-100, 100));
      c.push_back(rng.uniform(0.05, 1.0));
    }
    AggregationResult r = rtd(make_obs(x, c), cfg, default_init(x));
    CHECK(r.converged);
    CHECK(r.iterations < cfg.max_iters);
  }
}

TEST_CASE("permutation invariance") {
  Rng rng(4);
  IterationConfig cfg;
  std::vector<double> x, c;
  for (int i = 0; i < 9; ++i) {
    x.push_back(rng.uniform(-20, 20));
    c.push_back(rng.uniform(0.1, 1.0));
  }
  AggregationResult base = rtd(make_obs(x, c), cfg, default_init(x));
  std::vector<std::size_t> perm = {4, 2, 7, 0, 8, 1, 6, 3, 5};
  std::vector<double> px, pc;
  for (std::size_t i : perm) {
    px.push_back(x[i]);
    pc.push_back(c[i]);
  }
  AggregationResult shuffled = rtd(make_obs(px, pc), cfg, default_init(px));
  CHECK(base.estimate == doctest::Approx(shuffled.estimate).epsilon(1e-12));
}

TEST_CASE("too few values are rejected") {
  IterationConfig cfg;
  CHECK_THROWS_AS(crh({1}, cfg, 1.0), std::domain_error);
}

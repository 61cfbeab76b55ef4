#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace mcs {

// Plaintext aggregation methods. The iterative methods serve as the oracle
// for the masked multi-party protocol: both compute the same fixed point.

struct Observation {
  std::string worker;
  double value = 0.0;
  double reputation = 0.0;  // in [0, 1]
};

struct IterationConfig {
  double delta = 1e-6;
  int max_iters = 100;
  double distance_floor = 1e-9;
};

struct AggregationResult {
  double estimate = 0.0;
  Eigen::VectorXd weights;
  int iterations = 0;
  bool converged = false;
  bool fallback = false;  // degenerate weight mass, simpler estimator used
};

double mean(const std::vector<double>& values);
double median(std::vector<double> values);
double weighted_mean(const std::vector<Observation>& obs);

// Default iteration seed: mean of the inputs, nudged off zero.
double default_init(const std::vector<double>& values);

// Iterative reweighting with uniform reputations.
AggregationResult crh(const std::vector<double>& values, const IterationConfig& cfg,
                      double init);

// Reputation-weighted iterative reweighting: estimate update uses w_i * C_i.
AggregationResult rtd(const std::vector<Observation>& obs, const IterationConfig& cfg,
                      double init);

}  // namespace mcs

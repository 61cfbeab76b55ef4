#include "mcs/truth_discovery.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mcs {

double mean(const std::vector<double>& values) {
  if (values.empty()) throw std::domain_error("mean: empty input");
  double s = 0.0;
  for (double v : values) s += v;
  return s / static_cast<double>(values.size());
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::domain_error("median: empty input");
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double weighted_mean(const std::vector<Observation>& obs) {
  if (obs.empty()) throw std::domain_error("weighted_mean: empty input");
  double num = 0.0, den = 0.0;
  for (const Observation& o : obs) {
    num += o.value * o.reputation;
    den += o.reputation;
  }
  if (den <= 0.0) throw std::domain_error("weighted_mean: zero reputation mass");
  return num / den;
}

double default_init(const std::vector<double>& values) {
  double m = mean(values);
  return m == 0.0 ? 1e-9 : m;
}

namespace {

// Shared fixed-point loop. Reputations are all one for the uniform variant.
AggregationResult iterate(const std::vector<double>& values,
                          const std::vector<double>& reputations,
                          const IterationConfig& cfg, double init) {
  if (values.size() < 2) throw std::domain_error("iterate: need at least 2 values");
  if (cfg.delta <= 0.0 || cfg.max_iters < 1 || cfg.distance_floor <= 0.0) {
    throw std::domain_error("iterate: invalid iteration config");
  }
  const std::size_t k = values.size();
  AggregationResult out;
  out.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(k));

  double estimate = init;
  for (int n = 1; n <= cfg.max_iters; ++n) {
    out.iterations = n;
    double dist_sum = 0.0;
    std::vector<double> dist(k);
    for (std::size_t i = 0; i < k; ++i) {
      dist[i] = std::max(std::abs(values[i] - estimate), cfg.distance_floor);
      dist_sum += dist[i];
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double w = std::log(dist_sum / dist[i]);
      out.weights(static_cast<Eigen::Index>(i)) = w;
      num += values[i] * w * reputations[i];
      den += w * reputations[i];
    }
    if (den <= 0.0) {
      out.fallback = true;
      double rep_mass = 0.0;
      for (double c : reputations) rep_mass += c;
      if (rep_mass > 0.0) {
        double wnum = 0.0;
        for (std::size_t i = 0; i < k; ++i) wnum += values[i] * reputations[i];
        out.estimate = wnum / rep_mass;
      } else {
        out.estimate = mean(values);
      }
      return out;
    }
    double next = num / den;
    bool done = std::abs(next - estimate) < cfg.delta;
    estimate = next;
    if (done) {
      out.converged = true;
      break;
    }
  }
  out.estimate = estimate;
  return out;
}

}  // namespace

AggregationResult crh(const std::vector<double>& values, const IterationConfig& cfg,
                      double init) {
  std::vector<double> ones(values.size(), 1.0);
  return iterate(values, ones, cfg, init);
}

AggregationResult rtd(const std::vector<Observation>& obs, const IterationConfig& cfg,
                      double init) {
  std::vector<double> values, reps;
  values.reserve(obs.size());
  reps.reserve(obs.size());
  for (const Observation& o : obs) {
    if (o.reputation < 0.0 || o.reputation > 1.0) {
      throw std::domain_error("rtd: reputation outside [0, 1]");
    }
    values.push_back(o.value);
    reps.push_back(o.reputation);
  }
  return iterate(values, reps, cfg, init);
}

}  // namespace mcs

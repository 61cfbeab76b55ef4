#pragma once

#include <string>
#include <vector>

namespace mcs {

struct MetricSample {
  std::string task_id;
  double estimate = 0.0;
  double truth = 0.0;
};

struct QualityParams {
  double lambda = 10.0;  // must exceed 1
};

double rmse(const std::vector<MetricSample>& samples);

// Q = 1 - |(1 / (1 + lambda^{-q}) - 0.5) * 2| with q = |estimate - truth| / |estimate|.
// Throws std::domain_error when the estimate is exactly zero.
double data_quality(const MetricSample& sample, const QualityParams& params);

struct QualitySummary {
  double mean_quality = 0.0;
  int counted = 0;
  int excluded = 0;  // zero-estimate samples skipped
};

QualitySummary mean_quality(const std::vector<MetricSample>& samples,
                            const QualityParams& params);

}  // namespace mcs

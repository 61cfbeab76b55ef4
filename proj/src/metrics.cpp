#include "mcs/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

double rmse(const std::vector<MetricSample>& samples) {
  if (samples.empty()) throw std::domain_error("rmse: empty input");
  double sum = 0.0;
  for (const MetricSample& s : samples) {
    double e = s.estimate - s.truth;
    sum += e * e;
  }
  return std::sqrt(sum / static_cast<double>(samples.size()));
}

double data_quality(const MetricSample& sample, const QualityParams& params) {
  if (params.lambda <= 1.0) throw std::domain_error("data_quality: lambda must exceed 1");
  if (sample.estimate == 0.0) throw std::domain_error("data_quality: zero estimate");
  double q = std::abs(sample.estimate - sample.truth) / std::abs(sample.estimate);
  double sigmoid = 1.0 / (1.0 + std::pow(params.lambda, -q));
  return 1.0 - std::abs((sigmoid - 0.5) * 2.0);
}

QualitySummary mean_quality(const std::vector<MetricSample>& samples,
                            const QualityParams& params) {
  if (samples.empty()) throw std::domain_error("mean_quality: empty input");
  QualitySummary out;
  double sum = 0.0;
  for (const MetricSample& s : samples) {
    if (s.estimate == 0.0) {
      out.excluded += 1;
      continue;
    }
    sum += data_quality(s, params);
    out.counted += 1;
  }
  if (out.counted == 0) throw std::domain_error("mean_quality: all samples excluded");
  out.mean_quality = sum / out.counted;
  return out;
}

}  // namespace mcs

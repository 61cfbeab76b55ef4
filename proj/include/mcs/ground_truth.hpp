#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcs/rng.hpp"

namespace mcs {

struct GroundTruthRecord {
  std::string task_id;
  double timestamp = 0.0;  // epoch seconds
  double lat = 0.0;
  double lon = 0.0;
  double true_value = 0.0;
};

// Loads CSV with header `task_id,timestamp,lat,lon,true_value`. Malformed
// rows, out-of-range coordinates, and empty files raise std::runtime_error
// naming the offending line.
std::vector<GroundTruthRecord> load_ground_truth(const std::string& path);
std::vector<GroundTruthRecord> parse_ground_truth(std::istream& in, const std::string& origin);

struct SyntheticTruthParams {
  int count = 100;
  double value_min = -5.0;
  double value_max = 35.0;
  double lat_min = 39.90;
  double lat_max = 40.00;
  double lon_min = 116.30;
  double lon_max = 116.40;
  double t0 = 1700000000.0;
  double t_step = 3600.0;  // tasks are an hour apart
};

std::vector<GroundTruthRecord> synthetic_ground_truth(const SyntheticTruthParams& params,
                                                      Rng& rng);

}  // namespace mcs

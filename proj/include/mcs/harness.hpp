#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mcs/config.hpp"
#include "mcs/ground_truth.hpp"
#include "mcs/transcript.hpp"

namespace mcs {

// One results row: a (seed, round, method) cell of a scenario.
struct ResultRow {
  std::string scenario;
  std::uint64_t seed = 0;
  int round = 0;
  std::string method;
  double rmse = 0.0;
  double mean_quality = 0.0;
  double reputation_mae = 0.0;
  int excluded_count = 0;  // zero-estimate samples plus aborted tasks
};

struct ScenarioResult {
  std::vector<ResultRow> rows;  // sorted by (seed, round, method)
  Transcript transcript;        // populated only when tracing
};

ScenarioResult run_scenario(const ScenarioConfig& cfg, bool trace = false);

// 10-significant-digit shortest form, e.g. for the results CSV.
std::string format_real(double v);

// RFC 4180: quotes a field when it contains a comma, quote, or newline.
std::string csv_field(const std::string& s);

void write_results_csv(const std::vector<ResultRow>& rows, std::ostream& os);

// Writes results.csv, config.json, and (when tracing) transcript.jsonl into
// out_dir, creating it if needed.
void emit_outputs(const ScenarioConfig& cfg, const ScenarioResult& result,
                  const std::string& out_dir, bool trace);

}  // namespace mcs

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcs/population.hpp"
#include "mcs/truth_discovery.hpp"

namespace mcs {

// One experiment scenario. Parsed from flat `key = value` text; every field
// has a typed key of the same name (lists are comma-separated).
struct ScenarioConfig {
  std::string scenario = "custom";

  int pool_size = 200;        // N
  int workers_per_task = 10;  // k
  int tasks = 1500;
  int tasks_per_round = 50;

  // Any of: mean, median, weighted_mean, crh, rtd, rdpp_td.
  std::vector<std::string> methods = {"mean", "median", "weighted_mean", "crh", "rtd"};

  double lambda = 10.0;
  double theta = 0.0;
  double xi = 0.2;
  bool colluded = false;

  double rep_threshold = 0.5;
  double gamma = 0.0;  // <= 0 selects the scale-based default
  double delta = 1e-6;
  int max_iters = 100;
  double budget = 100.0;

  double mask_add_halfwidth = 2000.0;
  double mask_mul_max = 8.0;

  NoiseParams noise;
  double collusion_offset_min = 10.0;
  double collusion_offset_max = 25.0;
  double collusion_jitter = 0.1;

  // "prior": every record starts at the uniform prior. "true_value": the TA
  // store is seeded from true reputations (established-workforce regimes).
  std::string reputation_seeding = "prior";

  // Empty path selects the synthetic generator.
  std::string truth_csv;
  int truth_count = 0;  // 0 -> one per task
  double truth_min = -5.0;
  double truth_max = 35.0;

  // Planted pool: overrides the default categories with planted_copies
  // workers per listed true reputation.
  std::vector<double> planted_reputations;
  int planted_copies = 10;

  // Applicant pool size for the recruitment pipeline, as a multiple of k.
  int candidate_multiplier = 2;

  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};

  void validate() const;  // throws std::invalid_argument with the offending key
  nlohmann::json to_json() const;

  IterationConfig iteration_config() const;
  AttackConfig attack_config() const;
};

// Parses flat key=value text ('#' comments, blank lines ignored). Unknown
// keys are rejected.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

// Named replicas of the paper-scale studies at desk scale.
ScenarioConfig preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace mcs

#include "mcs/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcs {

namespace {

const std::set<std::string> kKnownMethods = {"mean",  "median", "weighted_mean",
                                             "crh",   "rtd",    "rdpp_td"};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad real for key '" + key + "': " + v);
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int i = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("trailing");
    return i;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad integer for key '" + key + "': " + v);
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw std::invalid_argument("config: bad boolean for key '" + key + "': " + v);
}

}  // namespace

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("config: " + msg); };
  if (scenario.empty()) fail("scenario name is empty");
  if (pool_size < 2 && planted_reputations.empty()) fail("pool_size must be at least 2");
  if (workers_per_task < 2) fail("workers_per_task must be at least 2");
  if (tasks < 1) fail("tasks must be positive");
  if (tasks_per_round < 1) fail("tasks_per_round must be positive");
  if (methods.empty()) fail("methods list is empty");
  for (const std::string& m : methods) {
    if (!kKnownMethods.count(m)) fail("unknown method '" + m + "'");
  }
  if (lambda <= 1.0) fail("lambda must exceed 1");
  if (theta < 0.0 || theta > 1.0) fail("theta outside [0, 1]");
  if (xi <= 0.0 || xi > 1.0) fail("xi outside (0, 1]");
  if (rep_threshold < 0.0 || rep_threshold > 1.0) fail("rep_threshold outside [0, 1]");
  if (delta <= 0.0) fail("delta must be positive");
  if (max_iters < 1) fail("max_iters must be positive");
  if (budget < 0.0) fail("budget must be nonnegative");
  if (mask_add_halfwidth <= 0.0) fail("mask_add_halfwidth must be positive");
  if (mask_mul_max <= 1.0) fail("mask_mul_max must exceed 1");
  if (noise.small_frac < 0.0 || noise.small_floor <= 0.0 || noise.large_frac < 0.0 ||
      noise.large_floor <= 0.0 || noise.mw_halfwidth <= 0.0) {
    fail("noise parameters must be positive");
  }
  if (collusion_offset_min <= 0.0 || collusion_offset_max < collusion_offset_min) {
    fail("collusion offset range is invalid");
  }
  if (collusion_jitter < 0.0) fail("collusion_jitter must be nonnegative");
  if (reputation_seeding != "prior" && reputation_seeding != "true_value") {
    fail("reputation_seeding must be 'prior' or 'true_value'");
  }
  if (truth_csv.empty() && truth_min > truth_max) fail("truth range is inverted");
  for (double r : planted_reputations) {
    if (r <= 0.0 || r >= 1.0) fail("planted reputations must lie in (0, 1)");
  }
  if (!planted_reputations.empty() && planted_copies < 1) fail("planted_copies must be positive");
  if (candidate_multiplier < 1) fail("candidate_multiplier must be positive");
  if (seeds.empty()) fail("seeds list is empty");
}

nlohmann::json ScenarioConfig::to_json() const {
  nlohmann::json j;
  j["scenario"] = scenario;
  j["pool_size"] = pool_size;
  j["workers_per_task"] = workers_per_task;
  j["tasks"] = tasks;
  j["tasks_per_round"] = tasks_per_round;
  j["methods"] = methods;
  j["lambda"] = lambda;
  j["theta"] = theta;
  j["xi"] = xi;
  j["colluded"] = colluded;
  j["rep_threshold"] = rep_threshold;
  j["gamma"] = gamma;
  j["delta"] = delta;
  j["max_iters"] = max_iters;
  j["budget"] = budget;
  j["mask_add_halfwidth"] = mask_add_halfwidth;
  j["mask_mul_max"] = mask_mul_max;
  j["noise_small_frac"] = noise.small_frac;
  j["noise_small_floor"] = noise.small_floor;
  j["noise_large_frac"] = noise.large_frac;
  j["noise_large_floor"] = noise.large_floor;
  j["noise_mw_halfwidth"] = noise.mw_halfwidth;
  j["collusion_offset_min"] = collusion_offset_min;
  j["collusion_offset_max"] = collusion_offset_max;
  j["collusion_jitter"] = collusion_jitter;
  j["reputation_seeding"] = reputation_seeding;
  j["truth_csv"] = truth_csv;
  j["truth_count"] = truth_count;
  j["truth_min"] = truth_min;
  j["truth_max"] = truth_max;
  j["planted_reputations"] = planted_reputations;
  j["planted_copies"] = planted_copies;
  j["candidate_multiplier"] = candidate_multiplier;
  j["seeds"] = seeds;
  return j;
}

IterationConfig ScenarioConfig::iteration_config() const {
  IterationConfig cfg;
  cfg.delta = delta;
  cfg.max_iters = max_iters;
  return cfg;
}

AttackConfig ScenarioConfig::attack_config() const {
  AttackConfig cfg;
  cfg.theta = theta;
  cfg.xi = xi;
  cfg.colluded = colluded;
  cfg.offset_min = collusion_offset_min;
  cfg.offset_max = collusion_offset_max;
  cfg.jitter_sigma = collusion_jitter;
  return cfg;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty()) {
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " has an empty key or value");
    }

    if (key == "scenario") cfg.scenario = val;
    else if (key == "pool_size") cfg.pool_size = parse_int(key, val);
    else if (key == "workers_per_task") cfg.workers_per_task = parse_int(key, val);
    else if (key == "tasks") cfg.tasks = parse_int(key, val);
    else if (key == "tasks_per_round") cfg.tasks_per_round = parse_int(key, val);
    else if (key == "methods") cfg.methods = split_list(val);
    else if (key == "lambda") cfg.lambda = parse_double(key, val);
    else if (key == "theta") cfg.theta = parse_double(key, val);
    else if (key == "xi") cfg.xi = parse_double(key, val);
    else if (key == "colluded") cfg.colluded = parse_bool(key, val);
    else if (key == "rep_threshold") cfg.rep_threshold = parse_double(key, val);
    else if (key == "gamma") cfg.gamma = parse_double(key, val);
    else if (key == "delta") cfg.delta = parse_double(key, val);
    else if (key == "max_iters") cfg.max_iters = parse_int(key, val);
    else if (key == "budget") cfg.budget = parse_double(key, val);
    else if (key == "mask_add_halfwidth") cfg.mask_add_halfwidth = parse_double(key, val);
    else if (key == "mask_mul_max") cfg.mask_mul_max = parse_double(key, val);
    else if (key == "noise_small_frac") cfg.noise.small_frac = parse_double(key, val);
    else if (key == "noise_small_floor") cfg.noise.small_floor = parse_double(key, val);
    else if (key == "noise_large_frac") cfg.noise.large_frac = parse_double(key, val);
    else if (key == "noise_large_floor") cfg.noise.large_floor = parse_double(key, val);
    else if (key == "noise_mw_halfwidth") cfg.noise.mw_halfwidth = parse_double(key, val);
    else if (key == "collusion_offset_min") cfg.collusion_offset_min = parse_double(key, val);
    else if (key == "collusion_offset_max") cfg.collusion_offset_max = parse_double(key, val);
    else if (key == "collusion_jitter") cfg.collusion_jitter = parse_double(key, val);
    else if (key == "reputation_seeding") cfg.reputation_seeding = val;
    else if (key == "truth_csv") cfg.truth_csv = val;
    else if (key == "truth_count") cfg.truth_count = parse_int(key, val);
    else if (key == "truth_min") cfg.truth_min = parse_double(key, val);
    else if (key == "truth_max") cfg.truth_max = parse_double(key, val);
    else if (key == "planted_reputations") {
      cfg.planted_reputations.clear();
      for (const std::string& item : split_list(val)) {
        cfg.planted_reputations.push_back(parse_double(key, item));
      }
    } else if (key == "planted_copies") cfg.planted_copies = parse_int(key, val);
    else if (key == "candidate_multiplier") cfg.candidate_multiplier = parse_int(key, val);
    else if (key == "seeds") {
      cfg.seeds.clear();
      for (const std::string& item : split_list(val)) {
        long long s = std::stoll(item);
        if (s < 0) throw std::invalid_argument("config: negative seed");
        cfg.seeds.push_back(static_cast<std::uint64_t>(s));
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "' on line " +
                                  std::to_string(lineno));
    }
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ScenarioConfig preset(const std::string& name) {
  ScenarioConfig cfg;
  cfg.scenario = name;
  if (name == "fig6") {
    // Accuracy of the five estimators over rounds, no adversaries beyond the
    // baseline malicious share of the pool.
    cfg.methods = {"mean", "median", "weighted_mean", "crh", "rtd"};
    cfg.tasks = 1500;
    cfg.tasks_per_round = 50;
  } else if (name == "fig7") {
    // Data-quality comparison of the same estimators.
    cfg.methods = {"mean", "median", "weighted_mean", "crh", "rtd"};
    cfg.tasks = 1000;
    cfg.tasks_per_round = 50;
  } else if (name == "fig8") {
    // Reputation convergence on a planted pool with known true reputations.
    cfg.methods = {"rtd"};
    cfg.planted_reputations = {0.4, 0.6, 0.8};
    cfg.planted_copies = 10;
    cfg.pool_size = 30;
    cfg.workers_per_task = 15;
    cfg.tasks = 400;
    cfg.tasks_per_round = 2;
    cfg.gamma = 0.6;
    cfg.truth_min = 10.0;
    cfg.truth_max = 12.0;
    cfg.noise.large_floor = 4.0;
  } else if (name == "fig9") {
    // Collusion stress at a fixed reputation cap: quality of all estimators.
    cfg.methods = {"mean", "median", "weighted_mean", "crh", "rtd"};
    cfg.colluded = true;
    cfg.theta = 0.8;
    cfg.xi = 0.2;
    cfg.tasks = 500;
    cfg.tasks_per_round = 50;
    cfg.reputation_seeding = "true_value";
    cfg.truth_min = 10.0;
    cfg.truth_max = 35.0;
  } else if (name == "fig10") {
    // Reputation-weighted robustness across the (theta, xi) grid; the driver
    // varies theta and xi per run.
    cfg.methods = {"rtd"};
    cfg.colluded = true;
    cfg.theta = 0.4;
    cfg.xi = 0.5;
    cfg.tasks = 500;
    cfg.tasks_per_round = 50;
    cfg.reputation_seeding = "true_value";
    cfg.truth_min = 10.0;
    cfg.truth_max = 35.0;
  } else if (name == "fig11") {
    // Full pipeline with recruitment gating versus reputation weighting alone.
    cfg.methods = {"rtd", "rdpp_td"};
    cfg.colluded = true;
    cfg.theta = 0.8;
    cfg.xi = 0.5;
    cfg.rep_threshold = 0.5;
    cfg.tasks = 500;
    cfg.tasks_per_round = 50;
    cfg.reputation_seeding = "true_value";
    cfg.truth_min = 10.0;
    cfg.truth_max = 35.0;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  cfg.validate();
  return cfg;
}

std::vector<std::string> preset_names() {
  return {"fig6", "fig7", "fig8", "fig9", "fig10", "fig11"};
}

}  // namespace mcs

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcs/rng.hpp"

namespace mcs {

// Synthetic worker pools and adversary models.

enum class WorkerCategory { MW, AW, TW };

const char* to_string(WorkerCategory c);

struct WorkerProfile {
  std::string id;  // real identity, simulation-only
  WorkerCategory category = WorkerCategory::AW;
  double true_reputation = 0.5;  // probability of a high-quality submission
};

struct NoiseParams {
  double small_frac = 0.02;   // sigma_small = max(small_frac * |g|, small_floor)
  double small_floor = 0.2;
  double large_frac = 0.2;    // sigma_large = max(large_frac * |g|, large_floor)
  double large_floor = 2.0;
  double mw_halfwidth = 30.0; // MW data uniform in g +- mw_halfwidth
};

struct AttackConfig {
  double theta = 0.0;          // malicious fraction per task
  double xi = 0.2;             // reputation cap of malicious workers
  bool colluded = false;
  double offset_min = 10.0;    // |Delta| range for the shared false value
  double offset_max = 25.0;
  double jitter_sigma = 0.1;
};

// 30% MW / 50% AW / 20% TW with largest-remainder rounding. In the collusion
// regime MW reputations are drawn from (0, xi) instead of (0, 0.2).
std::vector<WorkerProfile> generate_pool(int n, std::optional<double> xi_cap, Rng& rng);

double sigma_small(double g, const NoiseParams& p);
double sigma_large(double g, const NoiseParams& p);

// One honest-or-unreliable reading: TW/AW branch on true reputation, MW draws
// uniformly over a wide range independent of g.
double sense(const WorkerProfile& profile, double g, const NoiseParams& p, Rng& rng);

// Per-task shared false value g + Delta, |Delta| in [offset_min, offset_max],
// random sign.
double collusion_target(double g, const AttackConfig& cfg, Rng& rng);

// A single colluder's submission: target plus small jitter.
double collude_value(double target, const AttackConfig& cfg, Rng& rng);

}  // namespace mcs

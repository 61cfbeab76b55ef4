#include "mcs/population.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace mcs {

const char* to_string(WorkerCategory c) {
  switch (c) {
    case WorkerCategory::MW: return "MW";
    case WorkerCategory::AW: return "AW";
    case WorkerCategory::TW: return "TW";
  }
  return "?";
}

namespace {

// Largest-remainder apportionment of n into the 30/50/20 split.
std::array<int, 3> category_counts(int n) {
  const double props[3] = {0.3, 0.5, 0.2};
  std::array<int, 3> counts{};
  double remainders[3];
  int assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = props[i] * n;
    counts[i] = static_cast<int>(std::floor(exact));
    remainders[i] = exact - counts[i];
    assigned += counts[i];
  }
  int order[3] = {0, 1, 2};
  std::sort(order, order + 3, [&](int a, int b) {
    if (remainders[a] != remainders[b]) return remainders[a] > remainders[b];
    return a < b;
  });
  for (int i = 0; assigned < n; ++i, ++assigned) counts[order[i % 3]] += 1;
  return counts;
}

}  // namespace

std::vector<WorkerProfile> generate_pool(int n, std::optional<double> xi_cap, Rng& rng) {
  if (n < 1) throw std::domain_error("generate_pool: need at least one worker");
  if (xi_cap && (*xi_cap <= 0.0 || *xi_cap >= 1.0)) {
    throw std::domain_error("generate_pool: xi outside (0, 1)");
  }
  auto counts = category_counts(n);
  double mw_hi = xi_cap.value_or(0.2);

  std::vector<WorkerProfile> pool;
  pool.reserve(n);
  int serial = 0;
  auto add = [&](WorkerCategory cat, double lo, double hi) {
    WorkerProfile w;
    w.id = std::string(to_string(cat)) + "-" + std::to_string(serial++);
    w.category = cat;
    double c;
    do {
      c = rng.uniform(lo, hi);
    } while (c <= lo && cat == WorkerCategory::MW);  // MW range is open at 0
    w.true_reputation = c;
    pool.push_back(w);
  };
  for (int i = 0; i < counts[0]; ++i) add(WorkerCategory::MW, 0.0, mw_hi);
  for (int i = 0; i < counts[1]; ++i) add(WorkerCategory::AW, 0.2, 0.7);
  for (int i = 0; i < counts[2]; ++i) add(WorkerCategory::TW, 0.7, 1.0);
  return pool;
}

double sigma_small(double g, const NoiseParams& p) {
  return std::max(p.small_frac * std::abs(g), p.small_floor);
}

double sigma_large(double g, const NoiseParams& p) {
  return std::max(p.large_frac * std::abs(g), p.large_floor);
}

double sense(const WorkerProfile& profile, double g, const NoiseParams& p, Rng& rng) {
  if (profile.category == WorkerCategory::MW) {
    return rng.uniform(g - p.mw_halfwidth, g + p.mw_halfwidth);
  }
  if (rng.bernoulli(profile.true_reputation)) {
    return g + rng.normal(0.0, sigma_small(g, p));
  }
  return g + rng.normal(0.0, sigma_large(g, p));
}

double collusion_target(double g, const AttackConfig& cfg, Rng& rng) {
  double magnitude = rng.uniform(cfg.offset_min, cfg.offset_max);
  double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
  return g + sign * magnitude;
}

double collude_value(double target, const AttackConfig& cfg, Rng& rng) {
  return target + rng.normal(0.0, cfg.jitter_sigma);
}

}  // namespace mcs

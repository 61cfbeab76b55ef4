#pragma once

#include <cstdint>
#include <string_view>

#include <gmpxx.h>

namespace mcs {

// Deterministic random source. All distributions are implemented by hand on
// top of a single 64-bit generator so that a seed fully determines every
// draw, independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Derives an independent stream. Children with distinct labels (or the
  // same label and distinct indices) are decorrelated from the parent and
  // from each other.
  Rng child(std::string_view label, std::uint64_t index = 0) const;

  // Uniform on [lo, hi) for reals, [lo, hi] for integers.
  double uniform(double lo, double hi);
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  mpz_class uniform_mpz(const mpz_class& lo, const mpz_class& hi);

  double normal(double mean, double sigma);
  bool bernoulli(double p);

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace mcs

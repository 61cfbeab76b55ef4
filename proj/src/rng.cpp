#include "mcs/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

namespace {

// splitmix64, used both as the core generator and for seed derivation.
std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

Rng::Rng(std::uint64_t seed) : state_(seed), seed_(seed) {
  // Warm up so that nearby seeds diverge immediately.
  (void)splitmix64(state_);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

Rng Rng::child(std::string_view label, std::uint64_t index) const {
  std::uint64_t s = seed_;
  s ^= fnv1a(label) + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
  s ^= (index + 1) * 0xd6e8feb86659fd93ULL;
  return Rng(s);
}

double Rng::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("Rng::uniform: lo > hi");
  double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform_int: lo > hi");
  std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next_u64());  // full range
  // Rejection sampling to avoid modulo bias.
  std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t v;
  do {
    v = next_u64();
  } while (v >= limit);
  return lo + static_cast<std::int64_t>(v % range);
}

mpz_class Rng::uniform_mpz(const mpz_class& lo, const mpz_class& hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform_mpz: lo > hi");
  mpz_class range = hi - lo + 1;
  std::size_t bits = mpz_sizeinbase(range.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  mpz_class v;
  do {
    v = 0;
    for (std::size_t i = 0; i < words; ++i) {
      mpz_class w = static_cast<unsigned long>(next_u64() >> 32);
      w <<= 32;
      w |= static_cast<unsigned long>(next_u64() & 0xffffffffULL);
      v <<= 64;
      v |= w;
    }
    // Keep only `bits` bits so the rejection rate stays below 1/2.
    mpz_class mask = (mpz_class(1) << bits) - 1;
    v &= mask;
  } while (v >= range);
  return lo + v;
}

double Rng::normal(double mean, double sigma) {
  if (has_spare_) {
    has_spare_ = false;
    return mean + sigma * spare_normal_;
  }
  double u1, u2;
  do {
    u1 = uniform(0.0, 1.0);
  } while (u1 <= 0.0);
  u2 = uniform(0.0, 1.0);
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * M_PI * u2;
  spare_normal_ = r * std::sin(theta);
  has_spare_ = true;
  return mean + sigma * r * std::cos(theta);
}

bool Rng::bernoulli(double p) { return uniform(0.0, 1.0) < p; }

}  // namespace mcs

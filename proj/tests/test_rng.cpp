#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "mcs/rng.hpp"

using namespace mcs;

TEST_CASE("same seed reproduces the same stream") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct seeds diverge") {
  Rng a(1), b(2);
  int same = 0;
  for (int i = 0; i < 100; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("child streams are independent of parent consumption") {
  Rng parent(7);
  Rng c1 = parent.child("x", 3);
  parent.next_u64();
  parent.next_u64();
  Rng c2 = parent.child("x", 3);
  for (int i = 0; i < 100; ++i) CHECK(c1.next_u64() == c2.next_u64());
}

TEST_CASE("children with distinct labels or indices differ") {
  Rng parent(7);
  Rng a = parent.child("x", 0);
  Rng b = parent.child("x", 1);
  Rng c = parent.child("y", 0);
  CHECK(a.next_u64() != b.next_u64());
  CHECK(a.next_u64() != c.next_u64());
}

TEST_CASE("uniform respects bounds and is roughly uniform") {
  Rng rng(9);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    double v = rng.uniform(2.0, 5.0);
    REQUIRE(v >= 2.0);
    REQUIRE(v < 5.0);
    sum += v;
  }
  CHECK(std::abs(sum / 10000 - 3.5) < 0.05);
}

TEST_CASE("uniform_int covers its inclusive range") {
  Rng rng(11);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    std::int64_t v = rng.uniform_int(-2, 3);
    REQUIRE(v >= -2);
    REQUIRE(v <= 3);
    seen.insert(v);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("uniform_mpz stays in range and hits distinct values") {
  Rng rng(13);
  mpz_class lo(1), hi;
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, 100);
  std::set<std::string> seen;
  for (int i = 0; i < 200; ++i) {
    mpz_class v = rng.uniform_mpz(lo, hi);
    REQUIRE(v >= lo);
    REQUIRE(v <= hi);
    seen.insert(v.get_str());
  }
  CHECK(seen.size() == 200);
}

TEST_CASE("normal moments") {
  Rng rng(17);
  double sum = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    double v = rng.normal(1.0, 2.0);
    sum += v;
    sq += v * v;
  }
  double m = sum / n;
  double var = sq / n - m * m;
  CHECK(std::abs(m - 1.0) < 0.05);
  CHECK(std::abs(var - 4.0) < 0.15);
}

TEST_CASE("bernoulli frequency") {
  Rng rng(19);
  int ones = 0;
  for (int i = 0; i < 10000; ++i) ones += rng.bernoulli(0.3) ? 1 : 0;
  CHECK(std::abs(ones / 10000.0 - 0.3) < 0.02);
}

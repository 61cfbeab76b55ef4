#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcs/fixed_point.hpp"
#include "mcs/rng.hpp"

using namespace mcs;

TEST_CASE("zero maps to the offset and back") {
  FixedPointCodec codec(GroupParams::default_group());
  mpz_class offset = (GroupParams::default_group().p - 1) / 2;
  CHECK(codec.encode(0.0) == offset);
  CHECK(codec.decode(codec.encode(0.0)) == 0.0);
}

TEST_CASE("scale 100 example") {
  FixedPointCodec codec(GroupParams::default_group(), 2);
  mpz_class offset = (GroupParams::default_group().p - 1) / 2;
  CHECK(codec.encode(3.25) == 325 + offset);
  CHECK(codec.decode(codec.encode(3.25)) == doctest::Approx(3.25).epsilon(1e-12));
}

TEST_CASE("out-of-range values are rejected") {
  FixedPointCodec codec(GroupParams::default_group());
  double too_big = codec.capacity() * 2.0;
  CHECK_THROWS_AS(codec.encode(too_big), std::domain_error);
  CHECK_THROWS_AS(codec.encode(-too_big), std::domain_error);
}

TEST_CASE("negative values round-trip") {
  FixedPointCodec codec(GroupParams::default_group());
  CHECK(codec.decode(codec.encode(-17.5)) == doctest::Approx(-17.5).epsilon(1e-12));
}

TEST_CASE("encode-decode identity within one scale unit on 10^4 random reals") {
  FixedPointCodec codec(GroupParams::default_group());
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    double x = rng.uniform(-1e6, 1e6);
    double back = codec.decode(codec.encode(x));
    CHECK(std::abs(back - x) <= 1e-6);
  }
}

TEST_CASE("binary-representable scale multiples are exact") {
  FixedPointCodec codec(GroupParams::default_group());
  Rng rng(6);
  for (int i = 0; i < 1000; ++i) {
    // Quarters are exact in both binary and the decimal fixed-point scale.
    double x = static_cast<double>(rng.uniform_int(-2000000, 2000000)) / 4.0;
    CHECK(codec.decode(codec.encode(x)) == x);
  }
}

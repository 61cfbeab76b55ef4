#pragma once

#include <gmpxx.h>

#include "mcs/elgamal.hpp"

namespace mcs {

// Maps signed reals into the ElGamal plaintext range [1, p-1]:
// encode(x) = round(x * scale) + offset, with offset = (p-1)/2.
class FixedPointCodec {
 public:
  explicit FixedPointCodec(const GroupParams& params, unsigned scale_pow10 = 6);

  mpz_class encode(double x) const;  // throws std::domain_error on overflow
  double decode(const mpz_class& v) const;

  const mpz_class& scale() const { return scale_; }
  // Largest |x| that encodes without error.
  double capacity() const;

 private:
  mpz_class scale_;
  mpz_class offset_;
  mpz_class lo_;  // 1
  mpz_class hi_;  // p - 1
};

}  // namespace mcs

#include "mcs/fixed_point.hpp"

#include <cmath>
#include <stdexcept>

namespace mcs {

FixedPointCodec::FixedPointCodec(const GroupParams& params, unsigned scale_pow10) {
  params.validate();
  scale_ = 1;
  for (unsigned i = 0; i < scale_pow10; ++i) scale_ *= 10;
  offset_ = (params.p - 1) / 2;
  lo_ = 1;
  hi_ = params.p - 1;
}

mpz_class FixedPointCodec::encode(double x) const {
  if (!std::isfinite(x)) throw std::domain_error("FixedPointCodec: non-finite value");
  mpq_class q(x);
  q *= mpq_class(scale_);
  // round(q) = floor(q + 1/2); exact rational arithmetic throughout.
  mpq_class shifted = q + mpq_class(1, 2);
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
  mpz_class v = scaled + offset_;
  if (v < lo_ || v > hi_) throw std::domain_error("FixedPointCodec: value out of range");
  return v;
}

double FixedPointCodec::decode(const mpz_class& v) const {
  if (v < lo_ || v > hi_) throw std::domain_error("FixedPointCodec: plaintext out of range");
  mpq_class q(v - offset_);
  q /= mpq_class(scale_);
  return q.get_d();
}

double FixedPointCodec::capacity() const {
  mpq_class q(offset_ - 1);
  q /= mpq_class(scale_);
  return q.get_d();
}

}  // namespace mcs

#pragma once

#include "mcs/bytes.hpp"
#include "mcs/eigen_mpz.hpp"
#include "mcs/rng.hpp"

namespace mcs {

// Oblivious interval verification over blinded monomial vectors. A worker
// commits to the monomials (T^3, T^2, T, 1) of a fixed-point attribute T; the
// verifier later checks the sign of an inner product that equals a blinded
// multiple of (T - a)(b - T)(T + eps), i.e. the in-interval predicate.
// All arithmetic is exact, so the sign decision is exact.

struct AttributeVector {
  ExactVec4 monomials;  // (T^3, T^2, T, 1)
};

struct CommitmentKey {
  ExactMat4 matrix;
  mpz_class det;  // signed determinant, nonzero

  mpz_class det_abs() const { return abs(det); }

  // Random integer matrix with entries in [-2^entry_bits, 2^entry_bits],
  // resampled until invertible.
  static CommitmentKey random(Rng& rng, unsigned entry_bits = 64);
  static CommitmentKey from_matrix(const ExactMat4& m);
  static CommitmentKey identity();
};

struct Commitment {
  ExactVec4 blinded;  // tau * |det(K)| * K^{-1} * v, exact integers
};

struct IntervalCheckVector {
  ExactVec4 coeffs;  // dot with (T^3, T^2, T, 1) = (T - a)(b - T)(T + eps)
};

struct CheckResponse {
  ExactVec4 blinded;  // tau' * K^T * d
};

mpz_class det4(const ExactMat4& m);
ExactMat4 adjugate(const ExactMat4& m);

AttributeVector make_attribute_vector(const mpz_class& t);

// mu is the bit width of the fresh positive blinding factor.
Commitment commit(const CommitmentKey& key, const AttributeVector& v, Rng& rng,
                  unsigned mu = 128);
Commitment commit_with_blinding(const CommitmentKey& key, const AttributeVector& v,
                                const mpz_class& tau);

// coeffs = (-1, a+b-eps, eps(a+b)-ab, -eps*ab); throws if a > b.
IntervalCheckVector make_check_vector(const mpz_class& a, const mpz_class& b,
                                      const mpz_class& eps);

CheckResponse respond(const CommitmentKey& key, const IntervalCheckVector& d, Rng& rng,
                      unsigned mu = 128);
CheckResponse respond_with_blinding(const CommitmentKey& key, const IntervalCheckVector& d,
                                    const mpz_class& tau);

// Inner product of the blinded vectors is >= 0 exactly when a <= T <= b
// (closed interval; a zero product passes).
bool verify(const Commitment& commitment, const CheckResponse& response);

// Length-prefixed big-endian serialization with a leading sign byte per entry.
Bytes serialize(const ExactVec4& v);

}  // namespace mcs

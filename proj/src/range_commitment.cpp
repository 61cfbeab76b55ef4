#include "mcs/range_commitment.hpp"

#include <stdexcept>

namespace mcs {

namespace {

mpz_class det3(const ExactMat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
         m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
         m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
}

mpz_class fresh_blinding(Rng& rng, unsigned mu) {
  mpz_class hi = (mpz_class(1) << mu) - 1;
  return rng.uniform_mpz(1, hi);
}

}  // namespace

mpz_class det4(const ExactMat4& m) {
  mpz_class d = 0;
  int rows[3];
  for (int i = 0, sign = 1; i < 4; ++i, sign = -sign) {
    int k = 0;
    for (int r = 0; r < 4; ++r) {
      if (r != i) rows[k++] = r;
    }
    d += sign * m(i, 0) * det3(m, rows[0], rows[1], rows[2], 1, 2, 3);
  }
  return d;
}

ExactMat4 adjugate(const ExactMat4& m) {
  ExactMat4 adj;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      int rows[3], cols[3];
      int rk = 0, ck = 0;
      for (int r = 0; r < 4; ++r) {
        if (r != i) rows[rk++] = r;
      }
      for (int c = 0; c < 4; ++c) {
        if (c != j) cols[ck++] = c;
      }
      mpz_class cof = det3(m, rows[0], rows[1], rows[2], cols[0], cols[1], cols[2]);
      if ((i + j) % 2 == 1) cof = -cof;
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

CommitmentKey CommitmentKey::random(Rng& rng, unsigned entry_bits) {
  mpz_class bound = mpz_class(1) << entry_bits;
  ExactMat4 m;
  while (true) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        m(i, j) = rng.uniform_mpz(-bound, bound);
      }
    }
    mpz_class d = det4(m);
    if (d != 0) return CommitmentKey{m, d};
  }
}

CommitmentKey CommitmentKey::from_matrix(const ExactMat4& m) {
  mpz_class d = det4(m);
  if (d == 0) throw std::domain_error("CommitmentKey: singular matrix");
  return CommitmentKey{m, d};
}

CommitmentKey CommitmentKey::identity() {
  ExactMat4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m(i, j) = (i == j) ? 1 : 0;
  }
  return CommitmentKey{m, 1};
}

AttributeVector make_attribute_vector(const mpz_class& t) {
  AttributeVector v;
  v.monomials(0) = t * t * t;
  v.monomials(1) = t * t;
  v.monomials(2) = t;
  v.monomials(3) = 1;
  return v;
}

Commitment commit(const CommitmentKey& key, const AttributeVector& v, Rng& rng, unsigned mu) {
  return commit_with_blinding(key, v, fresh_blinding(rng, mu));
}

Commitment commit_with_blinding(const CommitmentKey& key, const AttributeVector& v,
                                const mpz_class& tau) {
  if (key.det == 0) throw std::domain_error("commit: singular key");
  if (tau <= 0) throw std::domain_error("commit: blinding must be positive");
  // |det| * K^{-1} = sign(det) * adj(K), an exact integer matrix.
  ExactVec4 blinded = adjugate(key.matrix) * v.monomials;
  mpz_class factor = (key.det < 0) ? -tau : tau;
  for (int i = 0; i < 4; ++i) blinded(i) *= factor;
  return Commitment{blinded};
}

IntervalCheckVector make_check_vector(const mpz_class& a, const mpz_class& b,
                                      const mpz_class& eps) {
  if (a > b) throw std::domain_error("make_check_vector: empty interval");
  IntervalCheckVector d;
  d.coeffs(0) = -1;
  d.coeffs(1) = a + b - eps;
  d.coeffs(2) = eps * (a + b) - a * b;
  d.coeffs(3) = -eps * a * b;
  return d;
}

CheckResponse respond(const CommitmentKey& key, const IntervalCheckVector& d, Rng& rng,
                      unsigned mu) {
  return respond_with_blinding(key, d, fresh_blinding(rng, mu));
}

CheckResponse respond_with_blinding(const CommitmentKey& key, const IntervalCheckVector& d,
                                    const mpz_class& tau) {
  if (tau <= 0) throw std::domain_error("respond: blinding must be positive");
  ExactVec4 blinded = key.matrix.transpose() * d.coeffs;
  for (int i = 0; i < 4; ++i) blinded(i) *= tau;
  return CheckResponse{blinded};
}

bool verify(const Commitment& commitment, const CheckResponse& response) {
  mpz_class dot = 0;
  for (int i = 0; i < 4; ++i) dot += commitment.blinded(i) * response.blinded(i);
  return dot >= 0;
}

Bytes serialize(const ExactVec4& v) {
  Bytes out;
  for (int i = 0; i < 4; ++i) {
    out.push_back(v(i) < 0 ? 1 : 0);
    append_length_prefixed(out, abs(v(i)));
  }
  return out;
}

}  // namespace mcs

#include "mcs/elgamal.hpp"

#include <set>
#include <stdexcept>

namespace mcs {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

}  // namespace

void GroupParams::validate() const {
  if (p <= 3) throw std::domain_error("GroupParams: p must exceed 3");
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw std::domain_error("GroupParams: p is not prime");
  }
  if (c <= 1 || c >= p) throw std::domain_error("GroupParams: generator out of range");
}

const GroupParams& GroupParams::default_group() {
  // p = 2q + 1 with q prime; 5 has full order 2q in Z_p^*.
  static const GroupParams g{
      mpz_class("61437182671931899702728615754717504231552732588040523597035074626643784782223"),
      mpz_class(5)};
  return g;
}

bool is_full_order_generator(const GroupParams& params) {
  std::set<mpz_class> seen;
  mpz_class x = 1;
  mpz_class order = params.p - 1;
  for (mpz_class i = 0; i < order; ++i) {
    x = (x * params.c) % params.p;
    if (!seen.insert(x).second) return false;
  }
  return mpz_class(seen.size()) == order;
}

KeyPair keygen(const GroupParams& params, Rng& rng) {
  params.validate();
  mpz_class secret = rng.uniform_mpz(1, params.p - 2);
  return keypair_from_secret(params, secret);
}

KeyPair keypair_from_secret(const GroupParams& params, const mpz_class& secret) {
  params.validate();
  if (secret < 1 || secret > params.p - 2) {
    throw std::domain_error("keypair_from_secret: exponent out of range");
  }
  KeyPair kp;
  kp.pub.group = params;
  kp.pub.h = powm(params.c, secret, params.p);
  kp.secret = secret;
  return kp;
}

Ciphertext encrypt(const PublicKey& pk, const mpz_class& m, Rng& rng) {
  mpz_class k = rng.uniform_mpz(1, pk.group.p - 2);
  return encrypt_with_ephemeral(pk, m, k);
}

Ciphertext encrypt_with_ephemeral(const PublicKey& pk, const mpz_class& m, const mpz_class& k) {
  if (m < 1 || m > pk.group.p - 1) {
    throw std::domain_error("encrypt: plaintext outside [1, p-1]");
  }
  Ciphertext ct;
  ct.c1 = powm(pk.group.c, k, pk.group.p);
  ct.c2 = (m * powm(pk.h, k, pk.group.p)) % pk.group.p;
  return ct;
}

mpz_class decrypt(const KeyPair& kp, const Ciphertext& ct) {
  const mpz_class& p = kp.pub.group.p;
  if (ct.c1 < 1 || ct.c1 > p - 1 || ct.c2 < 1 || ct.c2 > p - 1) {
    throw std::domain_error("decrypt: ciphertext component out of range");
  }
  mpz_class s = powm(ct.c1, kp.secret, p);
  mpz_class s_inv;
  if (mpz_invert(s_inv.get_mpz_t(), s.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw std::domain_error("decrypt: shared secret not invertible");
  }
  return (ct.c2 * s_inv) % p;
}

Bytes serialize(const Ciphertext& ct) {
  Bytes out;
  append_length_prefixed(out, ct.c1);
  append_length_prefixed(out, ct.c2);
  return out;
}

}  // namespace mcs

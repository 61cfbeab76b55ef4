#pragma once

#include <gmpxx.h>

#include "mcs/bytes.hpp"
#include "mcs/rng.hpp"

namespace mcs {

// Multiplicative group Z_p^* with generator c.
struct GroupParams {
  mpz_class p;
  mpz_class c;

  // Throws std::domain_error if p is not an odd prime > 3 or c is outside
  // (1, p). Generator order is accepted at construction; small groups can be
  // checked exhaustively with is_full_order_generator().
  void validate() const;

  // 256-bit safe prime with a full-order generator, fixed for the simulator.
  static const GroupParams& default_group();
};

// True iff c generates all of Z_p^*. Enumerates the group; only for small p.
bool is_full_order_generator(const GroupParams& params);

struct PublicKey {
  GroupParams group;
  mpz_class h;  // c^secret mod p
};

struct KeyPair {
  PublicKey pub;
  mpz_class secret;  // in [1, p-2]
};

struct Ciphertext {
  mpz_class c1;
  mpz_class c2;
};

KeyPair keygen(const GroupParams& params, Rng& rng);
KeyPair keypair_from_secret(const GroupParams& params, const mpz_class& secret);

// Plaintext must lie in [1, p-1]; throws std::domain_error otherwise.
Ciphertext encrypt(const PublicKey& pk, const mpz_class& m, Rng& rng);
// Test hook: forces the ephemeral exponent.
Ciphertext encrypt_with_ephemeral(const PublicKey& pk, const mpz_class& m, const mpz_class& k);

mpz_class decrypt(const KeyPair& kp, const Ciphertext& ct);

Bytes serialize(const Ciphertext& ct);

}  // namespace mcs

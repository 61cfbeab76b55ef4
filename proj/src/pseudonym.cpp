#include "mcs/pseudonym.hpp"

#include <stdexcept>

namespace mcs {

Pseudonym make_pseudonym(const Bytes& identity, const mpz_class& authority_secret,
                         const mpz_class& salt) {
  if (identity.empty()) throw std::domain_error("make_pseudonym: empty identity");
  // The secret-salt product is hashed via its canonical length-prefixed
  // big-endian serialization.
  mpz_class product = authority_secret * salt;
  Bytes mask = hash_to_width(length_prefixed(product), identity.size());
  Pseudonym out;
  out.value.resize(identity.size());
  for (std::size_t i = 0; i < identity.size(); ++i) {
    out.value[i] = identity[i] ^ mask[i];
  }
  return out;
}

Bytes identity_bytes(const std::string& name, std::size_t width) {
  Bytes raw(name.begin(), name.end());
  if (raw.size() >= width) {
    raw.resize(width);
    return raw;
  }
  Bytes padded = raw;
  padded.resize(width, 0);
  return padded;
}

}  // namespace mcs

#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

#include "mcs/bytes.hpp"

namespace mcs {

// Registration-time pseudonym: identity XOR H(authority_secret * salt),
// with the hash width-adjusted to the identity encoding.
struct Pseudonym {
  Bytes value;

  auto operator<=>(const Pseudonym&) const = default;
  std::string hex() const { return to_hex(value); }
};

Pseudonym make_pseudonym(const Bytes& identity, const mpz_class& authority_secret,
                         const mpz_class& salt);

// Convenience for string identities used by the simulator.
Bytes identity_bytes(const std::string& name, std::size_t width = 16);

}  // namespace mcs

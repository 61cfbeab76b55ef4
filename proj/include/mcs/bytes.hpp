#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mcs {

using Bytes = std::vector<std::uint8_t>;

// Canonical serialization of a nonnegative integer: 4-byte big-endian length
// followed by the big-endian magnitude (empty magnitude for zero).
Bytes length_prefixed(const mpz_class& v);
void append_length_prefixed(Bytes& out, const mpz_class& v);

// Big-endian magnitude without the length prefix.
Bytes magnitude_be(const mpz_class& v);
mpz_class from_magnitude_be(const Bytes& b);

Bytes sha256(const Bytes& data);

// Expands (or truncates) SHA-256 output to `width` bytes using a counter.
Bytes hash_to_width(const Bytes& seed, std::size_t width);

std::string to_hex(const Bytes& b);

}  // namespace mcs

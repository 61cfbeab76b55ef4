#include "mcs/bytes.hpp"

#include <stdexcept>

#include <openssl/evp.h>

namespace mcs {

Bytes magnitude_be(const mpz_class& v) {
  if (v < 0) throw std::domain_error("magnitude_be: negative value");
  if (v == 0) return {};
  std::size_t count = 0;
  Bytes out((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8);
  mpz_export(out.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  out.resize(count);
  return out;
}

mpz_class from_magnitude_be(const Bytes& b) {
  mpz_class v;
  if (!b.empty()) mpz_import(v.get_mpz_t(), b.size(), 1, 1, 1, 0, b.data());
  return v;
}

void append_length_prefixed(Bytes& out, const mpz_class& v) {
  Bytes mag = magnitude_be(v);
  std::uint32_t n = static_cast<std::uint32_t>(mag.size());
  out.push_back(static_cast<std::uint8_t>(n >> 24));
  out.push_back(static_cast<std::uint8_t>(n >> 16));
  out.push_back(static_cast<std::uint8_t>(n >> 8));
  out.push_back(static_cast<std::uint8_t>(n));
  out.insert(out.end(), mag.begin(), mag.end());
}

Bytes length_prefixed(const mpz_class& v) {
  Bytes out;
  append_length_prefixed(out, v);
  return out;
}

Bytes sha256(const Bytes& data) {
  Bytes digest(32);
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != 32) {
    throw std::runtime_error("sha256: digest failure");
  }
  return digest;
}

Bytes hash_to_width(const Bytes& seed, std::size_t width) {
  Bytes out;
  out.reserve(width);
  std::uint32_t counter = 0;
  while (out.size() < width) {
    Bytes block = seed;
    block.push_back(static_cast<std::uint8_t>(counter >> 24));
    block.push_back(static_cast<std::uint8_t>(counter >> 16));
    block.push_back(static_cast<std::uint8_t>(counter >> 8));
    block.push_back(static_cast<std::uint8_t>(counter));
    Bytes d = sha256(block);
    out.insert(out.end(), d.begin(), d.end());
    ++counter;
  }
  out.resize(width);
  return out;
}

std::string to_hex(const Bytes& b) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(b.size() * 2);
  for (std::uint8_t c : b) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 0xf]);
  }
  return s;
}

}  // namespace mcs

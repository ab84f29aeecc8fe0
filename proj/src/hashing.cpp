#include "elgv/hashing.hpp"

#include <openssl/evp.h>

#include <array>

#include "elgv/errors.hpp"

namespace elgv {

std::string_view hash_mode_name(HashMode mode) {
  switch (mode) {
    case HashMode::sha1:
      return "sha1";
    case HashMode::sha256:
      return "sha256";
    case HashMode::none:
      return "none";
  }
  return "?";
}

HashMode parse_hash_mode(std::string_view name) {
  if (name == "sha1") return HashMode::sha1;
  if (name == "sha256") return HashMode::sha256;
  if (name == "none") return HashMode::none;
  throw ParseError(0, "unknown hash mode '" + std::string(name) + "'");
}

Digest digest_message(std::span<const unsigned char> message, HashMode mode, const Natural& p) {
  if (p < 3) throw DomainError("digest modulus p must be >= 3");
  Natural raw;
  if (mode == HashMode::none) {
    raw = from_bytes_be(message.data(), message.size());
  } else {
    const EVP_MD* md = mode == HashMode::sha1 ? EVP_sha1() : EVP_sha256();
    std::array<unsigned char, EVP_MAX_MD_SIZE> out{};
    unsigned int len = 0;
    if (EVP_Digest(message.data(), message.size(), out.data(), &len, md, nullptr) != 1) {
      throw Error("OpenSSL digest failed");
    }
    raw = from_bytes_be(out.data(), len);
  }
  return Digest{raw % (p - 1), mode};
}

}  // namespace elgv

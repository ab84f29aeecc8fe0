#pragma once

#include <span>
#include <string_view>

#include "elgv/natural.hpp"

namespace elgv {

enum class HashMode { sha1, sha256, none };

/// `sha1`, `sha256` or `none`.
std::string_view hash_mode_name(HashMode mode);
/// Exact lowercase names only; throws ParseError otherwise.
HashMode parse_hash_mode(std::string_view name);

/// The integer m fed into the signature equations. Always in [0, p-1).
struct Digest {
  Natural value;
  HashMode mode = HashMode::sha256;

  bool operator==(const Digest&) const = default;
};

/// H(message) read big-endian and reduced mod p-1. With HashMode::none the
/// raw message bytes are the integer.
Digest digest_message(std::span<const unsigned char> message, HashMode mode, const Natural& p);

}  // namespace elgv

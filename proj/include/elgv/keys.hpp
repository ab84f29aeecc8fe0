#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "elgv/natural.hpp"
#include "elgv/random.hpp"

namespace elgv {

enum class SchemeKind { classic, variant, general };

/// Largest nonce count accepted for the general scheme in files and on the CLI.
inline constexpr unsigned kMaxGeneralNonces = 64;

struct Scheme {
  SchemeKind kind = SchemeKind::variant;
  /// Nonce count; meaningful only for SchemeKind::general.
  unsigned n = 0;

  static Scheme classic() { return {SchemeKind::classic, 0}; }
  static Scheme variant() { return {SchemeKind::variant, 0}; }
  static Scheme general(unsigned n) { return {SchemeKind::general, n}; }

  bool operator==(const Scheme&) const = default;
};

std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme_name(std::string_view name);

struct PublicKey {
  Natural p;
  Natural g;  // primitive root mod p
  Natural y;  // g^x mod p
  Scheme scheme;

  /// Order of Z_p^*, the modulus for all exponent arithmetic.
  Natural group_order() const { return p - 1; }

  bool operator==(const PublicKey&) const = default;
};

struct PrivateKey {
  PublicKey pub;
  Natural x;

  bool operator==(const PrivateKey&) const = default;
};

inline constexpr std::uint64_t kDefaultKeygenAttempts = std::uint64_t{1} << 24;

/// Random safe prime p = 2q + 1 with exactly `bits` bits.
/// Throws GenerationTimeout after `attempt_budget` candidates.
Natural generate_safe_prime(unsigned bits, NonceSource& rng,
                            std::uint64_t attempt_budget = kDefaultKeygenAttempts);

/// bits in [16, 4096]. p is a safe prime, g the smallest primitive root,
/// x uniform in [1, p-1] with y = 1 rejected.
PrivateKey generate_keys(unsigned bits, Scheme scheme, NonceSource& rng,
                         std::uint64_t attempt_budget = kDefaultKeygenAttempts);

/// Builds a key from fixed parameters, checking primality of p,
/// primitivity of g (p-1 must factor under the default bound) and x range.
PrivateKey make_private_key(const Natural& p, const Natural& g, const Natural& x, Scheme scheme);

/// Text format `elgv-key-v1`; the x line is written only for include_private.
std::string encode_key(const PublicKey& key);
std::string encode_key(const PrivateKey& key, bool include_private = true);

using DecodedKey = std::variant<PublicKey, PrivateKey>;
/// Throws ParseError naming the offending line.
DecodedKey decode_key(std::string_view text);

/// The public half of either alternative.
const PublicKey& public_part(const DecodedKey& key);

}  // namespace elgv

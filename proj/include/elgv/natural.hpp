#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace elgv {

/// Arbitrary-precision integer. Every public operation treats it as a
/// non-negative value; negative inputs are rejected at module boundaries.
using Natural = mpz_class;

/// Number of significant bits; 0 for zero.
std::size_t bit_length(const Natural& n);

/// Lowercase hex without prefix and without leading zeros ("0" for zero).
std::string to_hex(const Natural& n);
std::string to_decimal(const Natural& n);

/// Strict lowercase hex: [0-9a-f]+, no redundant leading zero.
/// Throws ParseError (with line 0) on anything else.
Natural parse_hex(std::string_view text);

/// Decimal, or hex with a 0x prefix. Used for command-line flags.
Natural parse_flag_integer(std::string_view text);

/// Big-endian unsigned interpretation of a byte string.
Natural from_bytes_be(const unsigned char* data, std::size_t size);
std::vector<unsigned char> to_bytes_be(const Natural& n);

/// Reduce a possibly negative value into [0, modulus).
Natural normalize(const Natural& value, const Natural& modulus);

inline bool is_negative(const Natural& n) { return sgn(n) < 0; }

struct NaturalHash {
  std::size_t operator()(const Natural& n) const noexcept;
};

}  // namespace elgv

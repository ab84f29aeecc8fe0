#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "elgv/classic.hpp"
#include "elgv/general.hpp"
#include "elgv/hashing.hpp"
#include "elgv/keys.hpp"
#include "elgv/variant.hpp"

namespace elgv {

using AnySignature = std::variant<ClassicSignature, VariantSignature, GeneralSignature>;

/// Contents of an `elgv-sig-v1` file.
struct SignatureFile {
  HashMode hash = HashMode::sha256;
  AnySignature sig;

  Scheme scheme() const;
  bool operator==(const SignatureFile&) const = default;
};

std::string encode_signature(const SignatureFile& file);
/// Throws ParseError naming the offending line.
SignatureFile decode_signature(std::string_view text);

}  // namespace elgv

#pragma once

// Operation counts for one signing or verification, in the unit-cost model
// where an exponentiation weighs kExpInMults multiplications.

#include <cstdint>
#include <span>
#include <variant>

#include "elgv/classic.hpp"
#include "elgv/cost.hpp"
#include "elgv/general.hpp"
#include "elgv/variant.hpp"

namespace elgv {

/// Message bytes to be hashed here.
struct MessageBytes {
  std::span<const unsigned char> bytes;
  HashMode mode = HashMode::sha256;
};

/// Either form costs one hash evaluation: an injected Digest stands for
/// the h(M) the protocol computes upstream.
using DigestInput = std::variant<Digest, MessageBytes>;

template <class T>
struct Metered {
  T value;
  CostReport cost;
};

/// Bits sent with a signature: p, g, y and every signature component,
/// each counted at |p| bits.
std::uint64_t communication_bits(const PublicKey& pub, const ClassicSignature& sig);
std::uint64_t communication_bits(const PublicKey& pub, const VariantSignature& sig);
std::uint64_t communication_bits(const PublicKey& pub, const GeneralSignature& sig);

Metered<ClassicSignature> metered_sign_classic(const PrivateKey& key, const DigestInput& m,
                                               const ClassicNonce& nonce);
Metered<bool> metered_verify_classic(const PublicKey& pub, const DigestInput& m,
                                     const ClassicSignature& sig);
Metered<VariantSignature> metered_sign_variant(const PrivateKey& key, const DigestInput& m,
                                               const VariantNonces& nonces);
Metered<bool> metered_verify_variant(const PublicKey& pub, const DigestInput& m,
                                     const VariantSignature& sig);
Metered<GeneralSignature> metered_sign_general(const PrivateKey& key, const DigestInput& m,
                                               std::span<const Natural> nonces);
Metered<bool> metered_verify_general(const PublicKey& pub, const DigestInput& m,
                                     const GeneralSignature& sig);

}  // namespace elgv

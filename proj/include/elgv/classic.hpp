#pragma once

// Original ElGamal signatures: g^m = y^r * r^s (mod p).

#include "elgv/cost.hpp"
#include "elgv/hashing.hpp"
#include "elgv/keys.hpp"
#include "elgv/random.hpp"

namespace elgv {

struct ClassicSignature {
  Natural r;  // in [1, p-1]
  Natural s;  // in [0, p-2]

  bool operator==(const ClassicSignature&) const = default;
};

/// k in [1, p-2] with gcd(k, p-1) = 1.
struct ClassicNonce {
  Natural k;
};

/// r = g^k, s = (m - x r) k^-1 mod p-1. Throws InvalidNonceError for an
/// inadmissible k and ResampleRequired when s comes out as 0.
ClassicSignature sign_classic(const PrivateKey& key, const Digest& m, const ClassicNonce& nonce,
                              CostMeter* meter = nullptr);

/// Range checks, then the congruence. Never throws on malformed values.
bool verify_classic(const PublicKey& pub, const Digest& m, const ClassicSignature& sig,
                    CostMeter* meter = nullptr);

/// Uniform over admissible nonces.
ClassicNonce draw_classic_nonce(const Natural& p, NonceSource& rng);

/// Draws nonces until signing succeeds.
ClassicSignature sign_classic_random(const PrivateKey& key, const Digest& m, NonceSource& rng);

}  // namespace elgv

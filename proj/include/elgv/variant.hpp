#pragma once

// Three-variable signature: g^t = y^r * r^s * s^m (mod p), with
// r = g^k, s = g^l and t = r x + k s + l m (mod p-1). Signing needs no
// modular inversion, so any k, l in [1, p-1] works, even ones sharing a
// factor with p-1.
//
// Recovering x from one signature means a discrete log of g^t r^-s s^-m to
// base g^r. Fixing two of (r, s, t) and solving for the third leaves either
// a discrete log or an equation of the form r^s s^m = c with both unknowns
// in base and exponent. A set of n signatures gives n linear relations in
// 2n + 1 unknowns (x and every k_i, l_i), which does not pin down x.
// Without a hash an existential forgery exists; see attacks.hpp.

#include "elgv/cost.hpp"
#include "elgv/hashing.hpp"
#include "elgv/keys.hpp"
#include "elgv/random.hpp"

namespace elgv {

struct VariantSignature {
  Natural r;  // in [1, p-1]
  Natural s;  // in [1, p-1]
  Natural t;  // in [0, p-2]

  bool operator==(const VariantSignature&) const = default;
};

/// Both in [1, p-1]; no coprimality requirement.
struct VariantNonces {
  Natural k;
  Natural l;
};

/// Throws InvalidNonceError only for nonces outside [1, p-1].
VariantSignature sign_variant(const PrivateKey& key, const Digest& m, const VariantNonces& nonces,
                              CostMeter* meter = nullptr);

bool verify_variant(const PublicKey& pub, const Digest& m, const VariantSignature& sig,
                    CostMeter* meter = nullptr);

VariantNonces draw_variant_nonces(const Natural& p, NonceSource& rng);

}  // namespace elgv

#pragma once

// n-nonce generalization:
//   g^t = y^{r_1} * r_1^{r_2} * ... * r_{n-1}^{r_n} * r_n^m (mod p)
// with r_i = g^{k_i} and t = x r_1 + k_1 r_2 + ... + k_{n-1} r_n + k_n m.
// At n = 2 this is exactly the three-variable scheme with (r, s) = (r_1, r_2).

#include <span>
#include <vector>

#include "elgv/cost.hpp"
#include "elgv/hashing.hpp"
#include "elgv/keys.hpp"
#include "elgv/random.hpp"

namespace elgv {

struct GeneralSignature {
  std::vector<Natural> r;  // r_1..r_n, each in [1, p-1]
  Natural t;               // in [0, p-2]

  std::size_t n() const { return r.size(); }
  bool operator==(const GeneralSignature&) const = default;
};

/// nonces = k_1..k_n, each in [1, p-1]. Empty input is a DomainError.
GeneralSignature sign_general(const PrivateKey& key, const Digest& m,
                              std::span<const Natural> nonces, CostMeter* meter = nullptr);

bool verify_general(const PublicKey& pub, const Digest& m, const GeneralSignature& sig,
                    CostMeter* meter = nullptr);

/// sum u_i v_i mod modulus. With u = (x, k_1..k_n) and v = (r_1..r_n, m)
/// over p-1, this is the signature's t.
Natural dot_mod(std::span<const Natural> u, std::span<const Natural> v, const Natural& modulus);

std::vector<Natural> draw_general_nonces(const Natural& p, std::size_t n, NonceSource& rng);

}  // namespace elgv

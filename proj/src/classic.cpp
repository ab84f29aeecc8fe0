#include "elgv/classic.hpp"

#include "elgv/errors.hpp"
#include "elgv/numtheory.hpp"

namespace elgv {

ClassicSignature sign_classic(const PrivateKey& key, const Digest& m, const ClassicNonce& nonce,
                              CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  const PublicKey& pub = key.pub;
  const Natural n = pub.group_order();

  if (nonce.k < 1 || nonce.k > pub.p - 2) throw InvalidNonceError("k must lie in [1, p-2]");
  if (nt::gcd(nonce.k, n) != 1) throw InvalidNonceError("k is not invertible modulo p-1");

  const Natural r = cost.pow(pub.g, nonce.k, pub.p);
  const Natural xr = cost.mul(key.x, r, n);
  const Natural k_inv = cost.inv(nonce.k, n);
  const Natural s = cost.mul(normalize(m.value - xr, n), k_inv, n);
  if (s == 0) throw ResampleRequired("s = 0; draw a fresh nonce");
  return ClassicSignature{r, s};
}

bool verify_classic(const PublicKey& pub, const Digest& m, const ClassicSignature& sig,
                    CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  if (sig.r < 1 || sig.r > pub.p - 1) return false;
  if (sig.s < 0 || sig.s > pub.p - 2) return false;
  if (is_negative(m.value)) return false;

  const Natural lhs = cost.pow(pub.g, m.value, pub.p);
  const Natural rhs = cost.mul(cost.pow(pub.y, sig.r, pub.p), cost.pow(sig.r, sig.s, pub.p), pub.p);
  return lhs == rhs;
}

ClassicNonce draw_classic_nonce(const Natural& p, NonceSource& rng) {
  const Natural n = p - 1;
  for (;;) {
    Natural k = rng.uniform(1, p - 2);
    if (nt::gcd(k, n) == 1) return ClassicNonce{std::move(k)};
  }
}

ClassicSignature sign_classic_random(const PrivateKey& key, const Digest& m, NonceSource& rng) {
  for (;;) {
    try {
      return sign_classic(key, m, draw_classic_nonce(key.pub.p, rng));
    } catch (const ResampleRequired&) {
    }
  }
}

}  // namespace elgv

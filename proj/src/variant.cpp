#include "elgv/variant.hpp"

#include "elgv/errors.hpp"

namespace elgv {

VariantSignature sign_variant(const PrivateKey& key, const Digest& m, const VariantNonces& nonces,
                              CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  const PublicKey& pub = key.pub;
  const Natural n = pub.group_order();
  if (nonces.k < 1 || nonces.k > n) throw InvalidNonceError("k must lie in [1, p-1]");
  if (nonces.l < 1 || nonces.l > n) throw InvalidNonceError("l must lie in [1, p-1]");

  const Natural r = cost.pow(pub.g, nonces.k, pub.p);
  const Natural s = cost.pow(pub.g, nonces.l, pub.p);
  const Natural t =
      (cost.mul(r, key.x, n) + cost.mul(nonces.k, s, n) + cost.mul(nonces.l, m.value, n)) % n;
  return VariantSignature{r, s, t};
}

bool verify_variant(const PublicKey& pub, const Digest& m, const VariantSignature& sig,
                    CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  if (sig.r < 1 || sig.r > pub.p - 1) return false;
  if (sig.s < 1 || sig.s > pub.p - 1) return false;
  if (sig.t < 0 || sig.t > pub.p - 2) return false;
  if (is_negative(m.value)) return false;

  const Natural lhs = cost.pow(pub.g, sig.t, pub.p);
  const Natural yr = cost.pow(pub.y, sig.r, pub.p);
  const Natural rs = cost.pow(sig.r, sig.s, pub.p);
  const Natural sm = cost.pow(sig.s, m.value, pub.p);
  return lhs == cost.mul(cost.mul(yr, rs, pub.p), sm, pub.p);
}

VariantNonces draw_variant_nonces(const Natural& p, NonceSource& rng) {
  Natural k = rng.uniform(1, p - 1);
  Natural l = rng.uniform(1, p - 1);
  return VariantNonces{std::move(k), std::move(l)};
}

}  // namespace elgv

#include "elgv/general.hpp"

#include "elgv/errors.hpp"

namespace elgv {

GeneralSignature sign_general(const PrivateKey& key, const Digest& m,
                              std::span<const Natural> nonces, CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  if (nonces.empty()) throw DomainError("the general scheme needs at least one nonce");
  const PublicKey& pub = key.pub;
  const Natural n = pub.group_order();
  for (const auto& k : nonces) {
    if (k < 1 || k > n) throw InvalidNonceError("nonces must lie in [1, p-1]");
  }

  GeneralSignature sig;
  sig.r.reserve(nonces.size());
  for (const auto& k : nonces) sig.r.push_back(cost.pow(pub.g, k, pub.p));

  // Each secret multiplies the next public value; the last one multiplies m.
  Natural t = cost.mul(key.x, sig.r[0], n);
  for (std::size_t i = 0; i + 1 < nonces.size(); ++i) t += cost.mul(nonces[i], sig.r[i + 1], n);
  t += cost.mul(nonces.back(), m.value, n);
  sig.t = t % n;
  return sig;
}

bool verify_general(const PublicKey& pub, const Digest& m, const GeneralSignature& sig,
                    CostMeter* meter) {
  CostMeter scratch;
  CostMeter& cost = meter ? *meter : scratch;
  if (sig.r.empty()) return false;
  for (const auto& r : sig.r) {
    if (r < 1 || r > pub.p - 1) return false;
  }
  if (sig.t < 0 || sig.t > pub.p - 2) return false;
  if (is_negative(m.value)) return false;

  const Natural lhs = cost.pow(pub.g, sig.t, pub.p);
  Natural rhs = cost.pow(pub.y, sig.r[0], pub.p);
  for (std::size_t i = 0; i + 1 < sig.r.size(); ++i) {
    rhs = cost.mul(rhs, cost.pow(sig.r[i], sig.r[i + 1], pub.p), pub.p);
  }
  rhs = cost.mul(rhs, cost.pow(sig.r.back(), m.value, pub.p), pub.p);
  return lhs == rhs;
}

Natural dot_mod(std::span<const Natural> u, std::span<const Natural> v, const Natural& modulus) {
  if (u.size() != v.size()) throw DomainError("dot_mod: vectors differ in length");
  if (modulus < 1) throw DomainError("dot_mod: modulus must be positive");
  Natural acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += normalize(u[i], modulus) * normalize(v[i], modulus);
  return acc % modulus;
}

std::vector<Natural> draw_general_nonces(const Natural& p, std::size_t n, NonceSource& rng) {
  std::vector<Natural> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.uniform(1, p - 1));
  return out;
}

}  // namespace elgv

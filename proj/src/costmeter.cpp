#include "elgv/costmeter.hpp"

namespace elgv {
namespace {

Digest resolve(const DigestInput& input, const Natural& p, CostMeter& meter) {
  meter.count_hash();
  if (const auto* d = std::get_if<Digest>(&input)) return *d;
  const auto& msg = std::get<MessageBytes>(input);
  return digest_message(msg.bytes, msg.mode, p);
}

std::uint64_t words_times_p(const PublicKey& pub, std::uint64_t words) {
  return words * bit_length(pub.p);
}

}  // namespace

std::uint64_t communication_bits(const PublicKey& pub, const ClassicSignature&) {
  return words_times_p(pub, 5);
}

std::uint64_t communication_bits(const PublicKey& pub, const VariantSignature&) {
  return words_times_p(pub, 6);
}

std::uint64_t communication_bits(const PublicKey& pub, const GeneralSignature& sig) {
  return words_times_p(pub, sig.n() + 4);
}

Metered<ClassicSignature> metered_sign_classic(const PrivateKey& key, const DigestInput& m,
                                               const ClassicNonce& nonce) {
  CostMeter meter;
  const Digest d = resolve(m, key.pub.p, meter);
  ClassicSignature sig = sign_classic(key, d, nonce, &meter);
  meter.set_comm_bits(communication_bits(key.pub, sig));
  return {std::move(sig), meter.report()};
}

Metered<bool> metered_verify_classic(const PublicKey& pub, const DigestInput& m,
                                     const ClassicSignature& sig) {
  CostMeter meter;
  const Digest d = resolve(m, pub.p, meter);
  const bool ok = verify_classic(pub, d, sig, &meter);
  meter.set_comm_bits(communication_bits(pub, sig));
  return {ok, meter.report()};
}

Metered<VariantSignature> metered_sign_variant(const PrivateKey& key, const DigestInput& m,
                                               const VariantNonces& nonces) {
  CostMeter meter;
  const Digest d = resolve(m, key.pub.p, meter);
  VariantSignature sig = sign_variant(key, d, nonces, &meter);
  meter.set_comm_bits(communication_bits(key.pub, sig));
  return {std::move(sig), meter.report()};
}

Metered<bool> metered_verify_variant(const PublicKey& pub, const DigestInput& m,
                                     const VariantSignature& sig) {
  CostMeter meter;
  const Digest d = resolve(m, pub.p, meter);
  const bool ok = verify_variant(pub, d, sig, &meter);
  meter.set_comm_bits(communication_bits(pub, sig));
  return {ok, meter.report()};
}

Metered<GeneralSignature> metered_sign_general(const PrivateKey& key, const DigestInput& m,
                                               std::span<const Natural> nonces) {
  CostMeter meter;
  const Digest d = resolve(m, key.pub.p, meter);
  GeneralSignature sig = sign_general(key, d, nonces, &meter);
  meter.set_comm_bits(communication_bits(key.pub, sig));
  return {std::move(sig), meter.report()};
}

Metered<bool> metered_verify_general(const PublicKey& pub, const DigestInput& m,
                                     const GeneralSignature& sig) {
  CostMeter meter;
  const Digest d = resolve(m, pub.p, meter);
  const bool ok = verify_general(pub, d, sig, &meter);
  meter.set_comm_bits(communication_bits(pub, sig));
  return {ok, meter.report()};
}

}  // namespace elgv

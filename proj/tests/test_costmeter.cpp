#include <doctest.h>

#include <string>

#include "elgv/costmeter.hpp"
#include "elgv/errors.hpp"

using namespace elgv;

namespace {
Digest raw(const Natural& v) { return Digest{v, HashMode::none}; }
}  // namespace

TEST_CASE("variant counts on the worked example") {
  const PrivateKey key = make_private_key(509, 2, 281, Scheme::variant());
  const auto signed_ = metered_sign_variant(key, raw(432), VariantNonces{208, 386});
  CHECK(signed_.value == VariantSignature{332, 39, 440});
  CHECK(signed_.cost.exp_count == 2);
  CHECK(signed_.cost.mult_count == 3);
  CHECK(signed_.cost.hash_count == 1);
  CHECK(signed_.cost.inv_count == 0);
  CHECK(signed_.cost.weighted_mults() == 483);
  CHECK(signed_.cost.comm_bits == 54);

  const auto verified = metered_verify_variant(key.pub, raw(432), signed_.value);
  CHECK(verified.value);
  CHECK(verified.cost.exp_count == 4);
  CHECK(verified.cost.mult_count == 2);
  CHECK(verified.cost.hash_count == 1);
  CHECK(verified.cost.weighted_mults() == 962);
}

TEST_CASE("hashing inside the meter counts once and matches digest_message") {
  const PrivateKey key = make_private_key(509, 2, 281, Scheme::variant());
  const std::string text = "hello";
  const std::span<const unsigned char> bytes(reinterpret_cast<const unsigned char*>(text.data()),
                                             text.size());
  const auto a = metered_sign_variant(key, MessageBytes{bytes, HashMode::sha1}, {5, 6});
  const auto b = sign_variant(key, digest_message(bytes, HashMode::sha1, 509), {5, 6});
  CHECK(a.value == b);
  CHECK(a.cost.hash_count == 1);
}

TEST_CASE("general counts follow n exp / n+1 mult and n+2 exp / n mult") {
  auto rng = NonceSource::seeded(12);
  for (std::size_t n = 1; n <= 8; ++n) {
    const PrivateKey key = generate_keys(64, Scheme::general(static_cast<unsigned>(n)), rng);
    const Digest m = raw(rng.uniform(0, key.pub.p - 2));
    const auto nonces = draw_general_nonces(key.pub.p, n, rng);
    const auto s = metered_sign_general(key, m, nonces);
    CHECK(s.value == sign_general(key, m, nonces));
    CHECK(s.cost.exp_count == n);
    CHECK(s.cost.mult_count == n + 1);
    CHECK(s.cost.comm_bits == (n + 4) * 64);
    const auto v = metered_verify_general(key.pub, m, s.value);
    CHECK(v.value);
    CHECK(v.cost.exp_count == n + 2);
    CHECK(v.cost.mult_count == n);
  }
}

TEST_CASE("general n = 1 signing") {
  const PrivateKey key = make_private_key(23, 5, 3, Scheme::general(1));
  const std::vector<Natural> nonces{4};
  const auto s = metered_sign_general(key, raw(7), nonces);
  CHECK(s.cost.exp_count == 1);
  CHECK(s.cost.mult_count == 2);
}

TEST_CASE("classic counts keep the inversion separate") {
  const PrivateKey key = make_private_key(467, 2, 127, Scheme::classic());
  const auto s = metered_sign_classic(key, raw(100), ClassicNonce{213});
  CHECK(s.value == ClassicSignature{29, 51});
  CHECK(s.cost.exp_count == 1);
  CHECK(s.cost.mult_count == 2);
  CHECK(s.cost.inv_count == 1);
  CHECK(s.cost.weighted_mults() == 242);
  const auto v = metered_verify_classic(key.pub, raw(100), s.value);
  CHECK(v.value);
  CHECK(v.cost.exp_count == 3);
  CHECK(v.cost.mult_count == 1);
  CHECK(v.cost.comm_bits == 5 * 9);
}

TEST_CASE("variant counts do not depend on inputs") {
  auto rng = NonceSource::seeded(13);
  for (int i = 0; i < 50; ++i) {
    const PrivateKey key = generate_keys(48 + i % 4 * 16, Scheme::variant(), rng);
    const Digest m = raw(rng.uniform(0, key.pub.p - 2));
    const auto nonces = draw_variant_nonces(key.pub.p, rng);
    const auto s = metered_sign_variant(key, m, nonces);
    CHECK(s.value == sign_variant(key, m, nonces));
    CHECK(s.cost == CostReport{2, 3, 1, 0, 6 * bit_length(key.pub.p)});
    const auto v = metered_verify_variant(key.pub, m, s.value);
    CHECK(v.cost == CostReport{4, 2, 1, 0, 6 * bit_length(key.pub.p)});
  }
}

TEST_CASE("communication bits") {
  const PublicKey pub{509, 2, 482, Scheme::variant()};
  CHECK(communication_bits(pub, VariantSignature{}) == 54);
  CHECK(communication_bits(pub, GeneralSignature{{1, 2}, 0}) == 54);
  const PublicKey big{Natural(1) << 1023, 2, 3, Scheme::general(5)};
  CHECK(communication_bits(big, GeneralSignature{{1, 2, 3, 4, 5}, 0}) == 9216);
}

TEST_CASE("unmetered nonce errors propagate through the metered wrappers") {
  const PrivateKey key = make_private_key(23, 5, 3, Scheme::classic());
  CHECK_THROWS_AS(metered_sign_classic(key, raw(1), ClassicNonce{2}), InvalidNonceError);
  CHECK_THROWS_AS(metered_sign_general(key, raw(1), std::vector<Natural>{}), DomainError);
}

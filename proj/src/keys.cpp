#include "elgv/keys.hpp"

#include <vector>

#include "elgv/errors.hpp"
#include "elgv/numtheory.hpp"
#include "text_fields.hpp"

namespace elgv {
namespace {

constexpr std::string_view kKeyHeader = "elgv-key-v1";

const std::vector<unsigned long>& sieve_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1UL << 14;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      if (i > 2) out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Both q and 2q+1 prime. The Fermat check on p rejects most survivors cheaply.
bool is_safe_prime_pair(const Natural& q) {
  const Natural p = 2 * q + 1;
  if (nt::mod_pow(2, p - 1, p) != 1) return false;
  return nt::is_probable_prime(q) && nt::is_probable_prime(p);
}

nt::Factorization safe_prime_order_factorization(const Natural& p) {
  const Natural q = (p - 1) / 2;
  if (q == 2) return nt::Factorization({{2, 2}});
  return nt::Factorization({{2, 1}, {q, 1}});
}

void check_scheme(const Scheme& scheme) {
  if (scheme.kind == SchemeKind::general) {
    if (scheme.n < 1 || scheme.n > kMaxGeneralNonces) {
      throw DomainError("general scheme needs 1 <= n <= " + std::to_string(kMaxGeneralNonces));
    }
  } else if (scheme.n != 0) {
    throw DomainError("n applies to the general scheme only");
  }
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::classic:
      return "classic";
    case SchemeKind::variant:
      return "variant";
    case SchemeKind::general:
      return "general";
  }
  return "?";
}

SchemeKind parse_scheme_name(std::string_view name) {
  if (name == "classic") return SchemeKind::classic;
  if (name == "variant") return SchemeKind::variant;
  if (name == "general") return SchemeKind::general;
  throw ParseError(0, "unknown scheme '" + std::string(name) + "'");
}

Natural generate_safe_prime(unsigned bits, NonceSource& rng, std::uint64_t attempt_budget) {
  if (bits < 3) throw DomainError("safe primes need at least 3 bits");
  const unsigned q_bits = bits - 1;
  const auto& primes = sieve_primes();
  // Candidates near the sieve primes would be rejected as their own
  // multiples, so small sizes skip the sieve.
  const bool use_sieve = bits > 32;
  constexpr unsigned long kWindow = 1UL << 14;

  std::vector<unsigned long> residues(primes.size());
  std::uint64_t attempts = 0;
  while (attempts < attempt_budget) {
    Natural q = rng.random_bits(q_bits);
    mpz_setbit(q.get_mpz_t(), q_bits - 1);
    mpz_setbit(q.get_mpz_t(), 0);

    if (!use_sieve) {
      ++attempts;
      if (is_safe_prime_pair(q)) return 2 * q + 1;
      continue;
    }

    for (std::size_t i = 0; i < primes.size(); ++i) {
      residues[i] = mpz_fdiv_ui(q.get_mpz_t(), primes[i]);
    }
    for (unsigned long delta = 0; delta < kWindow && attempts < attempt_budget; delta += 2) {
      ++attempts;
      bool survives = true;
      for (std::size_t i = 0; i < primes.size(); ++i) {
        const unsigned long sp = primes[i];
        const unsigned long rq = (residues[i] + delta) % sp;
        // sp | q, or sp | 2q + 1.
        if (rq == 0 || (2 * rq + 1) % sp == 0) {
          survives = false;
          break;
        }
      }
      if (!survives) continue;
      const Natural candidate = q + delta;
      if (bit_length(candidate) != q_bits) break;
      if (is_safe_prime_pair(candidate)) return 2 * candidate + 1;
    }
  }
  throw GenerationTimeout("no " + std::to_string(bits) + "-bit safe prime within " +
                          std::to_string(attempt_budget) + " candidates");
}

PrivateKey generate_keys(unsigned bits, Scheme scheme, NonceSource& rng,
                         std::uint64_t attempt_budget) {
  if (bits < 16 || bits > 4096) throw DomainError("key size must be within [16, 4096] bits");
  check_scheme(scheme);
  const Natural p = generate_safe_prime(bits, rng, attempt_budget);
  const Natural g = nt::find_primitive_root(p, safe_prime_order_factorization(p));
  Natural x, y;
  do {
    x = rng.uniform(1, p - 1);
    y = nt::mod_pow(g, x, p);
  } while (y == 1);
  return PrivateKey{PublicKey{p, g, y, scheme}, x};
}

PrivateKey make_private_key(const Natural& p, const Natural& g, const Natural& x, Scheme scheme) {
  check_scheme(scheme);
  if (p < 3 || !nt::is_probable_prime(p)) throw DomainError("p must be an odd prime");
  if (g < 2 || g >= p) throw DomainError("generator must lie in [2, p-1]");
  if (!nt::is_primitive_root(g, p, nt::factor(p - 1))) {
    throw DomainError("generator is not a primitive root mod p");
  }
  if (x < 1 || x > p - 1) throw DomainError("x must lie in [1, p-1]");
  return PrivateKey{PublicKey{p, g, nt::mod_pow(g, x, p), scheme}, x};
}

std::string encode_key(const PublicKey& key) {
  std::string out;
  out += kKeyHeader;
  out += "\nscheme=";
  out += scheme_name(key.scheme.kind);
  out += '\n';
  if (key.scheme.kind == SchemeKind::general) out += "n=" + std::to_string(key.scheme.n) + "\n";
  out += "p=" + to_hex(key.p) + "\n";
  out += "g=" + to_hex(key.g) + "\n";
  out += "y=" + to_hex(key.y) + "\n";
  return out;
}

std::string encode_key(const PrivateKey& key, bool include_private) {
  std::string out = encode_key(key.pub);
  if (include_private) out += "x=" + to_hex(key.x) + "\n";
  return out;
}

DecodedKey decode_key(std::string_view text) {
  detail::FieldReader in(text);
  in.expect_header(kKeyHeader);

  const std::size_t scheme_line = in.line() + 1;
  Scheme scheme;
  try {
    scheme.kind = parse_scheme_name(in.expect("scheme"));
  } catch (const ParseError& e) {
    if (e.line() != 0) throw;
    throw ParseError(scheme_line, e.what());
  }
  if (scheme.kind == SchemeKind::general) scheme.n = in.expect_count("n", 1, kMaxGeneralNonces);

  PublicKey pub;
  pub.scheme = scheme;
  pub.p = in.expect_hex("p");
  if (pub.p < 3) throw ParseError(in.line(), "p must be >= 3");
  pub.g = in.expect_hex("g");
  if (pub.g < 2 || pub.g >= pub.p) throw ParseError(in.line(), "g out of range [2, p-1]");
  pub.y = in.expect_hex("y");
  if (pub.y < 1 || pub.y >= pub.p) throw ParseError(in.line(), "y out of range [1, p-1]");

  if (!in.peek("x")) {
    in.expect_end();
    return pub;
  }
  Natural x = in.expect_hex("x");
  if (x < 1 || x > pub.p - 1) throw ParseError(in.line(), "x out of range [1, p-1]");
  if (nt::mod_pow(pub.g, x, pub.p) != pub.y) throw ParseError(in.line(), "g^x mod p != y");
  in.expect_end();
  return PrivateKey{std::move(pub), std::move(x)};
}

const PublicKey& public_part(const DecodedKey& key) {
  if (const auto* priv = std::get_if<PrivateKey>(&key)) return priv->pub;
  return std::get<PublicKey>(key);
}

}  // namespace elgv

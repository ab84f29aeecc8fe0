#pragma once

// Instance builders shared by the unit and acceptance suites.

#include <vector>

#include "elgv/keys.hpp"
#include "elgv/numtheory.hpp"
#include "elgv/random.hpp"

namespace fixtures {

using elgv::Natural;

/// Random prime in [lo, hi] with its smallest primitive root and a random x.
/// p need not be a safe prime, so p-1 can share large factors with s1 - s2.
inline elgv::PrivateKey random_prime_key(elgv::NonceSource& rng, const Natural& lo,
                                         const Natural& hi, elgv::Scheme scheme) {
  for (;;) {
    const Natural p = rng.uniform(lo, hi);
    if (!elgv::nt::is_probable_prime(p)) continue;
    elgv::nt::Factorization f;
    try {
      f = elgv::nt::factor(p - 1);
    } catch (const std::exception&) {
      continue;
    }
    const Natural g = elgv::nt::find_primitive_root(p, f);
    return elgv::make_private_key(p, g, rng.uniform(1, p - 2), scheme);
  }
}

/// Prime p <= 2^max_bits with p - 1 = 2 * (product of primes < bound).
inline Natural smooth_prime(elgv::NonceSource& rng, unsigned max_bits, unsigned long bound) {
  std::vector<unsigned long> primes;
  for (unsigned long q = 3; q < bound; q += 2) {
    if (elgv::nt::is_probable_prime(q)) primes.push_back(q);
  }
  const Natural limit = Natural(1) << max_bits;
  for (;;) {
    Natural n = 2;
    while (n * primes.back() * 2 < limit) {
      n *= primes[rng.next_u64() % primes.size()];
    }
    const Natural p = n + 1;
    if (p >= (Natural(1) << (max_bits - 8)) && elgv::nt::is_probable_prime(p)) return p;
  }
}

inline elgv::PrivateKey key_on_prime(elgv::NonceSource& rng, const Natural& p, elgv::Scheme scheme,
                                     const Natural& bound = elgv::nt::kDefaultSmoothnessBound) {
  const Natural g = elgv::nt::find_primitive_root(p, elgv::nt::factor(p - 1, bound));
  Natural x;
  do {
    x = rng.uniform(1, p - 2);
  } while (elgv::nt::mod_pow(g, x, p) == 1);
  return elgv::PrivateKey{elgv::PublicKey{p, g, elgv::nt::mod_pow(g, x, p), scheme}, x};
}

}  // namespace fixtures

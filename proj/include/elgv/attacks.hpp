#pragma once

// Key recovery and forgery against the classic and three-variable schemes.
// Only smooth_subgroup_forge and existential_forge_no_hash are true
// forgeries; both take the public key alone.

#include <string>

#include "elgv/classic.hpp"
#include "elgv/hashing.hpp"
#include "elgv/keys.hpp"
#include "elgv/numtheory.hpp"
#include "elgv/random.hpp"
#include "elgv/variant.hpp"

namespace elgv::attacks {

/// Upper bound on enumerated candidates in either recovery attack.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 20;

/// A digest together with the classic signature issued over it.
struct SignedClassic {
  Natural m;
  ClassicSignature sig;
};

struct SignedVariant {
  Natural m;
  VariantSignature sig;
};

/// Intermediate values of the shared-nonce recovery, all modulo p-1:
/// s1 - s2 = d S, p-1 = d P, m1 - m2 = d M, and k = M S^-1 + K P.
struct NonceReuseTrace {
  Natural d;
  Natural S;
  Natural P;
  Natural M;
  Natural K_found;
  Natural k;
  Natural x;
  /// k candidates tested; always d.
  Natural candidates_inspected;
};

/// Recovers the shared nonce k and then x from two classic signatures with
/// the same r. Throws BudgetExceededError when d (or the number of x
/// candidates, when gcd(r, p-1) > 1) exceeds `budget`, and NoSolutionError
/// when the congruences are inconsistent.
NonceReuseTrace recover_from_nonce_reuse(const PublicKey& pub, const SignedClassic& first,
                                         const SignedClassic& second,
                                         const Natural& budget = kDefaultEnumerationBudget);

struct SmoothForgery {
  ClassicSignature sig;
  Natural beta;
  Natural t0;      // beta^t0 = g (mod p)
  Natural D;       // gcd(p-1, beta)
  Natural lambda;  // beta / D
  Natural z0;      // y^D = (g^D)^z0 (mod p)
  Natural bound;
};

/// Classic-scheme forgery for any digest when (p-1)/gcd(p-1, beta) is
/// `bound`-smooth: r = beta, s = t0 (m - beta z0) mod p-1.
/// Throws DomainError unless beta < p and beta^t0 = g, NotSmoothError otherwise.
SmoothForgery smooth_subgroup_forge(const PublicKey& pub, const Natural& beta, const Natural& t0,
                                    const Digest& m,
                                    const Natural& bound = nt::kDefaultSmoothnessBound);

struct ExistentialForgeryParams {
  Natural k;
  Natural k_prime;
  Natural l;
  Natural l_prime;  // gcd(l', p-1) = 1
};

struct ExistentialForgery {
  Natural m;
  VariantSignature sig;
};

/// With r = g^k y^k' and s = g^l y^l', the y exponent vanishes when
/// r + k' s + l' m = 0 (mod p-1), which fixes m; t = k s + l m. The result
/// verifies with an unhashed digest equal to m.
ExistentialForgery existential_forge_no_hash(const PublicKey& pub,
                                             const ExistentialForgeryParams& params);

ExistentialForgeryParams draw_existential_params(const Natural& p, NonceSource& rng);

/// Recovers l from two three-variable signatures sharing (r, s) by solving
/// (m1 - m2) l = t1 - t2 (mod p-1) and keeping the candidate with g^l = s.
/// The result is reduced mod p-1. k and x stay out of reach.
Natural recover_l_from_pair_reuse(const PublicKey& pub, const SignedVariant& first,
                                  const SignedVariant& second,
                                  const Natural& budget = kDefaultEnumerationBudget);

/// `symbol=hex` lines.
std::string format_trace(const NonceReuseTrace& trace);
std::string format_trace(const SmoothForgery& forgery);
std::string format_trace(const ExistentialForgery& forgery);

}  // namespace elgv::attacks

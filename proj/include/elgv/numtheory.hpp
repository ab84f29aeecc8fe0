#pragma once

// Modular arithmetic and discrete-logarithm machinery shared by the
// signature schemes and the attacks. Everything here is a pure function.

#include <cstdint>
#include <vector>

#include "elgv/natural.hpp"

namespace elgv::nt {

inline constexpr unsigned kDefaultPrimeRounds = 40;
inline constexpr std::uint64_t kDefaultSmoothnessBound = std::uint64_t{1} << 20;
/// Largest baby-step table discrete_log_bsgs will build.
inline constexpr std::uint64_t kMaxBabySteps = std::uint64_t{1} << 26;

struct PrimePower {
  Natural prime;
  unsigned exponent = 1;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization with strictly increasing primes.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  /// Product of prime^exponent over all entries (1 when empty).
  Natural value() const;

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<PrimePower> factors_;
};

/// All x in [0, modulus) with a*x = b (mod modulus):
/// { base + j*step : 0 <= j < count }, step = modulus / count.
struct CongruenceSolutionSet {
  Natural base;
  Natural step;
  Natural count;
  Natural modulus;

  Natural at(const Natural& j) const { return base + j * step; }
  /// Materializes every solution in increasing order. Callers bound `count` first.
  std::vector<Natural> values() const;
};

Natural gcd(const Natural& a, const Natural& b);

/// base^exponent mod modulus by left-to-right square-and-multiply.
Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus);

/// Extended Euclid. Throws NotInvertibleError carrying gcd(a, n).
Natural mod_inv(const Natural& a, const Natural& n);

/// Solves a*x = b (mod n). Inputs are reduced into [0, n) first.
CongruenceSolutionSet solve_linear_congruence(const Natural& a, const Natural& b, const Natural& n);

/// Trial division by small primes, then Miller-Rabin. Below 2^64 a fixed
/// base set makes the answer exact; above it `rounds` pseudo-random bases
/// are drawn from a generator seeded by n itself, so the call stays pure.
bool is_probable_prime(const Natural& n, unsigned rounds = kDefaultPrimeRounds);

/// Trial division up to `smoothness_bound`; a leftover cofactor is accepted
/// only if it is prime. Throws NotSmoothError otherwise.
Factorization factor(const Natural& n, const Natural& smoothness_bound = kDefaultSmoothnessBound);

/// Smallest g >= 2 whose order mod p is p-1.
Natural find_primitive_root(const Natural& p, const Factorization& p_minus_1);

/// True if g has order exactly p-1 modulo p.
bool is_primitive_root(const Natural& g, const Natural& p, const Factorization& p_minus_1);

/// Least e >= 0 with base^e = target (mod p), searching e < order.
Natural discrete_log_bsgs(const Natural& base, const Natural& target, const Natural& order,
                          const Natural& p);

/// Discrete log in the subgroup of order `order_factorization.value()`.
Natural pohlig_hellman(const Natural& base, const Natural& target,
                       const Factorization& order_factorization, const Natural& p);

/// x = residues[i] (mod moduli[i]) for pairwise coprime moduli.
Natural crt(const std::vector<Natural>& residues, const std::vector<Natural>& moduli);

Natural euler_phi(const Natural& n, const Factorization& factorization);

}  // namespace elgv::nt

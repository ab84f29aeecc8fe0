#include "elgv/numtheory.hpp"

#include <array>
#include <random>
#include <unordered_map>

#include "elgv/errors.hpp"

namespace elgv::nt {
namespace {

void require_non_negative(const Natural& v, const char* what) {
  if (is_negative(v)) throw DomainError(std::string(what) + " must be non-negative");
}

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long limit = 1000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// One Miller-Rabin round; n odd, n - 1 = odd_part * 2^twos.
bool passes_round(const Natural& n, const Natural& n_minus_1, const Natural& odd_part,
                  unsigned long twos, const Natural& witness) {
  Natural x = mod_pow(witness, odd_part, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long i = 1; i < twos; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].exponent == 0) throw DomainError("factorization exponents must be positive");
    if (factors_[i].prime < 2) throw DomainError("factorization primes must be >= 2");
    if (i > 0 && factors_[i].prime <= factors_[i - 1].prime) {
      throw DomainError("factorization primes must be strictly increasing");
    }
  }
}

Natural Factorization::value() const {
  Natural out = 1;
  for (const auto& f : factors_) {
    Natural pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    out *= pw;
  }
  return out;
}

std::vector<Natural> CongruenceSolutionSet::values() const {
  std::vector<Natural> out;
  if (count.fits_ulong_p()) out.reserve(count.get_ui());
  for (Natural j = 0; j < count; ++j) out.push_back(at(j));
  return out;
}

Natural gcd(const Natural& a, const Natural& b) {
  Natural g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Natural mod_pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  if (modulus < 2) throw DomainError("mod_pow modulus must be >= 2");
  require_non_negative(base, "mod_pow base");
  require_non_negative(exponent, "mod_pow exponent");

  const mpz_srcptr m = modulus.get_mpz_t();
  Natural b = base % modulus;
  Natural acc = 1;
  const std::size_t bits = bit_length(exponent);
  for (std::size_t i = bits; i-- > 0;) {
    mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), acc.get_mpz_t());
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) {
      mpz_mul(acc.get_mpz_t(), acc.get_mpz_t(), b.get_mpz_t());
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), m);
    }
  }
  return acc;
}

Natural mod_inv(const Natural& a, const Natural& n) {
  if (n < 2) throw DomainError("mod_inv modulus must be >= 2");
  require_non_negative(a, "mod_inv argument");

  // Invariant: old_r = old_s * a (mod n), r = s * a (mod n).
  Natural old_r = a % n, r = n;
  Natural old_s = 1, s = 0;
  while (r != 0) {
    Natural q = old_r / r;
    Natural next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    Natural next_s = old_s - q * s;
    old_s = s;
    s = next_s;
  }
  if (old_r != 1) throw NotInvertibleError(a, n, old_r);
  return normalize(old_s, n);
}

CongruenceSolutionSet solve_linear_congruence(const Natural& a, const Natural& b,
                                              const Natural& n) {
  if (n < 2) throw DomainError("congruence modulus must be >= 2");
  const Natural ar = normalize(a, n);
  const Natural br = normalize(b, n);
  const Natural d = gcd(ar, n);
  if (br % d != 0) {
    throw NoSolutionError("gcd(" + to_decimal(ar) + ", " + to_decimal(n) + ") = " +
                          to_decimal(d) + " does not divide " + to_decimal(br));
  }
  const Natural reduced_modulus = n / d;
  Natural base = 0;
  if (reduced_modulus > 1) {
    base = (br / d) * mod_inv(ar / d, reduced_modulus) % reduced_modulus;
  }
  return CongruenceSolutionSet{base, reduced_modulus, d, n};
}

bool is_probable_prime(const Natural& n, unsigned rounds) {
  if (n < 2) return false;
  for (unsigned long p : small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  const unsigned long largest = small_primes().back();
  if (n < Natural(largest) * largest) return true;

  Natural n_minus_1 = n - 1;
  Natural odd_part = n_minus_1;
  unsigned long twos = mpz_scan1(odd_part.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(odd_part.get_mpz_t(), odd_part.get_mpz_t(), twos);

  // Deterministic for every n < 3.3 * 10^24.
  static constexpr std::array<unsigned long, 12> kFixedBases = {2,  3,  5,  7,  11, 13,
                                                                17, 19, 23, 29, 31, 37};
  for (unsigned long w : kFixedBases) {
    if (!passes_round(n, n_minus_1, odd_part, twos, Natural(w))) return false;
  }
  if (bit_length(n) <= 64) return true;

  std::seed_seq seed{static_cast<unsigned>(NaturalHash{}(n)),
                     static_cast<unsigned>(NaturalHash{}(n) >> 32), rounds};
  std::mt19937_64 gen(seed);
  const Natural span = n - 3;  // witnesses in [2, n-2]
  const std::size_t span_bits = bit_length(span);
  for (unsigned i = 0; i < rounds; ++i) {
    Natural w;
    do {
      w = 0;
      for (std::size_t got = 0; got < span_bits; got += 64) {
        w <<= 64;
        w += static_cast<unsigned long>(gen());
      }
      mpz_fdiv_r_2exp(w.get_mpz_t(), w.get_mpz_t(), span_bits);
    } while (w >= span);
    if (!passes_round(n, n_minus_1, odd_part, twos, w + 2)) return false;
  }
  return true;
}

Factorization factor(const Natural& n, const Natural& smoothness_bound) {
  if (n < 2) throw DomainError("factor requires n >= 2");
  std::vector<PrimePower> out;
  Natural rest = n;

  auto strip = [&](unsigned long d) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.push_back({Natural(d), e});
  };

  constexpr unsigned long kTrialCap = 1UL << 32;
  const unsigned long limit =
      smoothness_bound >= kTrialCap ? kTrialCap : smoothness_bound.get_ui();
  if (limit >= 2) strip(2);
  for (unsigned long d = 3; d <= limit; d += 2) {
    if (mpz_cmp_ui(rest.get_mpz_t(), d * d) < 0) break;
    strip(d);
  }
  if (rest == 1) return Factorization(std::move(out));
  if (!is_probable_prime(rest)) throw NotSmoothError(rest, smoothness_bound);
  out.push_back({rest, 1});
  return Factorization(std::move(out));
}

bool is_primitive_root(const Natural& g, const Natural& p, const Factorization& p_minus_1) {
  if (g < 1 || g >= p) return false;
  const Natural order = p - 1;
  for (const auto& f : p_minus_1.factors()) {
    if (mod_pow(g, order / f.prime, p) == 1) return false;
  }
  return order == 1 || g != 1;
}

Natural find_primitive_root(const Natural& p, const Factorization& p_minus_1) {
  if (p < 3) throw DomainError("find_primitive_root requires p >= 3");
  if (p_minus_1.value() != p - 1) throw DomainError("factorization does not multiply to p-1");
  for (Natural g = 2; g < p; ++g) {
    if (is_primitive_root(g, p, p_minus_1)) return g;
  }
  throw DomainError(to_decimal(p) + " has no primitive root; is it prime?");
}

Natural discrete_log_bsgs(const Natural& base, const Natural& target, const Natural& order,
                          const Natural& p) {
  if (p < 2) throw DomainError("discrete log modulus must be >= 2");
  if (order < 1) throw DomainError("subgroup order must be positive");
  const Natural b = normalize(base, p);
  const Natural goal = normalize(target, p);
  if (goal == 1) return 0;

  Natural steps;
  mpz_sqrt(steps.get_mpz_t(), order.get_mpz_t());
  if (steps * steps < order) ++steps;
  if (steps > kMaxBabySteps) {
    throw BudgetExceededError("baby-step table of " + to_decimal(steps) + " entries exceeds cap");
  }
  const unsigned long m = steps.get_ui();

  std::unordered_map<Natural, unsigned long, NaturalHash> baby;
  baby.reserve(m);
  Natural cur = 1;
  for (unsigned long j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = cur * b % p;
  }

  const Natural giant = mod_pow(mod_inv(b, p), steps, p);
  Natural gamma = goal;
  const Natural rows = (order + steps - 1) / steps;
  for (Natural i = 0; i < rows; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) {
      Natural e = i * steps + it->second;
      if (e < order) return e;
      break;
    }
    gamma = gamma * giant % p;
  }
  throw NotFoundError(to_decimal(goal) + " is not in the subgroup generated by " + to_decimal(b));
}

Natural crt(const std::vector<Natural>& residues, const std::vector<Natural>& moduli) {
  if (residues.size() != moduli.size()) throw DomainError("crt: length mismatch");
  Natural x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] == 1) continue;
    const Natural lift = normalize(residues[i] - x, moduli[i]) * mod_inv(m % moduli[i], moduli[i]);
    x += m * (lift % moduli[i]);
    m *= moduli[i];
  }
  return x;
}

Natural pohlig_hellman(const Natural& base, const Natural& target,
                       const Factorization& order_factorization, const Natural& p) {
  const Natural order = order_factorization.value();
  const Natural b = normalize(base, p);
  const Natural goal = normalize(target, p);
  if (order == 1) {
    if (goal == 1) return 0;
    throw NotFoundError("target is outside the trivial subgroup");
  }
  const Natural b_inv = mod_inv(b, p);

  std::vector<Natural> residues, moduli;
  for (const auto& f : order_factorization.factors()) {
    const Natural& q = f.prime;
    const Natural gamma = mod_pow(b, order / q, p);  // order q
    Natural digit_weight = 1;                        // q^j
    Natural log_mod_prime_power = 0;
    for (unsigned j = 0; j < f.exponent; ++j) {
      // Strip the digits found so far, then project into the order-q subgroup.
      const Natural stripped = mod_pow(b_inv, log_mod_prime_power, p) * goal % p;
      const Natural h = mod_pow(stripped, order / (digit_weight * q), p);
      const Natural digit = discrete_log_bsgs(gamma, h, q, p);
      log_mod_prime_power += digit * digit_weight;
      digit_weight *= q;
    }
    residues.push_back(log_mod_prime_power);
    moduli.push_back(digit_weight);
  }
  Natural e = crt(residues, moduli);
  if (mod_pow(b, e, p) != goal) {
    throw NotFoundError("target is not in the subgroup of the given order");
  }
  return e;
}

Natural euler_phi(const Natural& n, const Factorization& factorization) {
  if (n < 1) throw DomainError("euler_phi requires n >= 1");
  if (factorization.value() != n) throw DomainError("factorization does not multiply to n");
  Natural phi = 1;
  for (const auto& f : factorization.factors()) {
    Natural pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent - 1);
    phi *= pw * (f.prime - 1);
  }
  return phi;
}

}  // namespace elgv::nt

#include "elgv/random.hpp"

#include "elgv/errors.hpp"

namespace elgv {

NonceSource NonceSource::seeded(std::uint64_t seed) {
  NonceSource src;
  src.engine_.seed(seed);
  return src;
}

NonceSource NonceSource::system() {
  NonceSource src;
  src.device_ = std::make_unique<std::random_device>();
  return src;
}

std::uint64_t NonceSource::next_u64() {
  if (device_) {
    const std::uint64_t hi = (*device_)();
    const std::uint64_t lo = (*device_)();
    return (hi << 32) ^ lo;
  }
  return engine_();
}

Natural NonceSource::random_bits(std::size_t bits) {
  Natural out = 0;
  for (std::size_t got = 0; got < bits; got += 64) {
    out <<= 64;
    out += static_cast<unsigned long>(next_u64());
  }
  mpz_fdiv_r_2exp(out.get_mpz_t(), out.get_mpz_t(), bits);
  return out;
}

Natural NonceSource::uniform(const Natural& lo, const Natural& hi) {
  if (hi < lo) throw DomainError("uniform: empty range");
  const Natural span = hi - lo + 1;
  const std::size_t bits = bit_length(span - 1);
  if (bits == 0) return lo;
  Natural v;
  do {
    v = random_bits(bits);
  } while (v >= span);
  return lo + v;
}

}  // namespace elgv

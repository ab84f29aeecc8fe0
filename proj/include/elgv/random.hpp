#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "elgv/natural.hpp"

namespace elgv {

/// Source of every random draw: key generation, nonces, attack parameters.
/// Seeded sources are mt19937_64 streams and replay exactly; the system
/// source reads std::random_device. Not safe for concurrent draws.
class NonceSource {
 public:
  static NonceSource seeded(std::uint64_t seed);
  static NonceSource system();

  NonceSource(NonceSource&&) noexcept = default;
  NonceSource& operator=(NonceSource&&) noexcept = default;

  std::uint64_t next_u64();
  /// Uniform in [0, 2^bits).
  Natural random_bits(std::size_t bits);
  /// Uniform in [lo, hi] by rejection sampling.
  Natural uniform(const Natural& lo, const Natural& hi);

  bool deterministic() const { return device_ == nullptr; }

 private:
  NonceSource() = default;

  std::mt19937_64 engine_;
  std::unique_ptr<std::random_device> device_;
};

}  // namespace elgv

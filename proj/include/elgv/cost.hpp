#pragma once

#include <cstdint>

#include "elgv/natural.hpp"

namespace elgv {

/// One modular exponentiation is charged as this many multiplications.
inline constexpr std::uint64_t kExpInMults = 240;

struct CostReport {
  std::uint64_t exp_count = 0;
  std::uint64_t mult_count = 0;
  std::uint64_t hash_count = 0;
  /// Modular inversions; kept out of weighted_mults().
  std::uint64_t inv_count = 0;
  std::uint64_t comm_bits = 0;

  std::uint64_t weighted_mults() const { return kExpInMults * exp_count + mult_count; }

  bool operator==(const CostReport&) const = default;
};

/// Arithmetic front-end the schemes route their counted operations through.
/// Each pow() is one unit exponentiation; its internal squarings are not
/// added to mult_count. Additions and reductions are free.
class CostMeter {
 public:
  Natural pow(const Natural& base, const Natural& exponent, const Natural& modulus);
  Natural mul(const Natural& a, const Natural& b, const Natural& modulus);
  Natural inv(const Natural& a, const Natural& modulus);
  void count_hash() { ++report_.hash_count; }
  void set_comm_bits(std::uint64_t bits) { report_.comm_bits = bits; }

  const CostReport& report() const { return report_; }

 private:
  CostReport report_;
};

}  // namespace elgv

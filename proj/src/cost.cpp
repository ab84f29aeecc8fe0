#include "elgv/cost.hpp"

#include "elgv/numtheory.hpp"

namespace elgv {

Natural CostMeter::pow(const Natural& base, const Natural& exponent, const Natural& modulus) {
  ++report_.exp_count;
  return nt::mod_pow(base, exponent, modulus);
}

Natural CostMeter::mul(const Natural& a, const Natural& b, const Natural& modulus) {
  ++report_.mult_count;
  return a * b % modulus;
}

Natural CostMeter::inv(const Natural& a, const Natural& modulus) {
  ++report_.inv_count;
  return nt::mod_inv(a, modulus);
}

}  // namespace elgv

#include "elgv/natural.hpp"

#include <algorithm>
#include <cctype>

#include "elgv/errors.hpp"

namespace elgv {

std::size_t bit_length(const Natural& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::string to_hex(const Natural& n) { return n.get_str(16); }

std::string to_decimal(const Natural& n) { return n.get_str(10); }

Natural parse_hex(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty hex value");
  if (text.size() > 1 && text.front() == '0') throw ParseError(0, "hex value has a leading zero");
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!ok) throw ParseError(0, "invalid hex digit '" + std::string(1, c) + "'");
  }
  return Natural(std::string(text), 16);
}

Natural parse_flag_integer(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty integer");
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    base = 16;
    text.remove_prefix(2);
  }
  for (char c : text) {
    bool ok = base == 10 ? (c >= '0' && c <= '9') : std::isxdigit(static_cast<unsigned char>(c));
    if (!ok) throw ParseError(0, "invalid integer '" + std::string(text) + "'");
  }
  return Natural(std::string(text), base);
}

Natural from_bytes_be(const unsigned char* data, std::size_t size) {
  Natural out;
  if (size == 0) return out;
  mpz_import(out.get_mpz_t(), size, 1, 1, 1, 0, data);
  return out;
}

std::vector<unsigned char> to_bytes_be(const Natural& n) {
  if (n == 0) return {};
  std::vector<unsigned char> out((bit_length(n) + 7) / 8);
  std::size_t written = 0;
  mpz_export(out.data(), &written, 1, 1, 1, 0, n.get_mpz_t());
  out.resize(written);
  return out;
}

Natural normalize(const Natural& value, const Natural& modulus) {
  Natural r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::size_t NaturalHash::operator()(const Natural& n) const noexcept {
  const mpz_srcptr z = n.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(z->_mp_size);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace elgv

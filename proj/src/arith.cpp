#include "bkseq/arith.hpp"

#include <cctype>
#include <stdexcept>

#include "bkseq/errors.hpp"

namespace bkseq::arith {

Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("mod_pow: modulus must be >= 2");
  }
  Natural result = 1;
  Natural b = base % modulus;
  const std::size_t bits = bit_length(exp);
  // Square-and-multiply, high bit first.
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exp.get_mpz_t(), i)) {
      result = (result * b) % modulus;
    }
  }
  return result;
}

Natural mod_inv(const Natural& x, const Natural& modulus) {
  if (modulus < 2) {
    throw std::invalid_argument("mod_inv: modulus must be >= 2");
  }
  Natural result;
  const int ok = mpz_invert(result.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  if (!ok) {
    throw NotInvertible("mod_inv: " + x.get_str() + " is not a unit modulo " +
                        modulus.get_str());
  }
  return result;
}

std::size_t bit_length(const Natural& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

Natural binom(std::uint64_t n, std::uint64_t k) {
  Natural result;
  if (k > n) return Natural(0);
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Natural pow(const Natural& base, std::uint64_t exp) {
  Natural result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}

std::string to_decimal(const Natural& x) { return x.get_str(); }

Natural from_decimal(const std::string& s) {
  if (s.empty()) {
    throw std::invalid_argument("from_decimal: empty string");
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("from_decimal: not a decimal digit string: " + s);
    }
  }
  return Natural(s, 10);
}

}  // namespace bkseq::arith

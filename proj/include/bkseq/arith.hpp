#ifndef BKSEQ_ARITH_HPP
#define BKSEQ_ARITH_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

namespace bkseq {

// Arbitrary-precision nonnegative integer. All residues, moduli and
// products live here. GMP backs the representation; the rest of the
// library only goes through the operations below plus value-semantics
// arithmetic on mpz_class itself.
using Natural = mpz_class;

namespace arith {

// base^exp mod modulus by square-and-multiply. modulus >= 2.
Natural mod_pow(const Natural& base, const Natural& exp, const Natural& modulus);

// y with x*y == 1 (mod modulus). Throws NotInvertible when gcd(x, modulus) != 1.
Natural mod_inv(const Natural& x, const Natural& modulus);

// Number of binary digits; bit_length(0) == 0.
std::size_t bit_length(const Natural& x);

// Exact binomial coefficient; k > n yields 0.
Natural binom(std::uint64_t n, std::uint64_t k);

// base^exp over the integers.
Natural pow(const Natural& base, std::uint64_t exp);

std::string to_decimal(const Natural& x);

// Parses a plain decimal digit string (no sign, no whitespace).
// Throws std::invalid_argument on anything else.
Natural from_decimal(const std::string& s);

}  // namespace arith
}  // namespace bkseq

#endif

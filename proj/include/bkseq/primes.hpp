#ifndef BKSEQ_PRIMES_HPP
#define BKSEQ_PRIMES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bkseq/arith.hpp"

namespace bkseq::primes {

// The n smallest primes different from excluded_prime, ascending.
struct FactorBase {
  std::vector<std::uint64_t> primes;
  std::uint64_t excluded_prime = 2;
  std::size_t n = 0;  // == primes.size()
};

// excluded must be 2 (odd primes) or 3 (primes coprime to 3); n >= 1.
FactorBase first_primes_coprime_to(std::uint64_t excluded, std::size_t n);

// Deterministic trial division up to the square root.
bool is_prime(const Natural& m);

}  // namespace bkseq::primes

#endif

#include "bkseq/primes.hpp"

#include <cmath>
#include <stdexcept>

namespace bkseq::primes {

namespace {

// Primes in [2, bound] by a plain Eratosthenes sieve.
std::vector<std::uint64_t> sieve_upto(std::uint64_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return out;
}

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0 || m % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= m; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace

FactorBase first_primes_coprime_to(std::uint64_t excluded, std::size_t n) {
  if (excluded != 2 && excluded != 3) {
    throw std::invalid_argument("first_primes_coprime_to: excluded must be 2 or 3");
  }
  if (n == 0) {
    throw std::invalid_argument("first_primes_coprime_to: n must be >= 1");
  }

  // p_{m} < m(ln m + ln ln m) for m >= 6; one extra slot covers the exclusion.
  const double m = static_cast<double>(n) + 2.0;
  std::uint64_t bound = 32;
  if (n >= 6) {
    bound = static_cast<std::uint64_t>(m * (std::log(m) + std::log(std::log(m)))) + 16;
  }

  FactorBase fb;
  fb.excluded_prime = excluded;
  fb.n = n;
  for (;;) {
    fb.primes.clear();
    for (std::uint64_t p : sieve_upto(bound)) {
      if (p == excluded) continue;
      fb.primes.push_back(p);
      if (fb.primes.size() == n) return fb;
    }
    bound *= 2;
  }
}

bool is_prime(const Natural& m) {
  if (mpz_fits_ulong_p(m.get_mpz_t())) {
    return is_prime_u64(mpz_get_ui(m.get_mpz_t()));
  }
  // Outside the machine-word range: same trial division on Naturals.
  if (m % 2 == 0 || m % 3 == 0) return false;
  Natural d = 5;
  while (d * d <= m) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
    d += 6;
  }
  return true;
}

}  // namespace bkseq::primes

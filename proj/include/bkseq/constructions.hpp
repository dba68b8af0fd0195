#ifndef BKSEQ_CONSTRUCTIONS_HPP
#define BKSEQ_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkseq/arith.hpp"
#include "bkseq/gfpk.hpp"

namespace bkseq {

enum class Construction { pow2, pow3, bose_chowla, geometric, custom };

std::string to_string(Construction c);

// Parses a construction tag; throws std::invalid_argument on unknown tags.
Construction construction_from_string(const std::string& tag);

// A candidate B_k set: all sums of k elements (with repetition) are
// distinct modulo `modulus` as multisets. `custom` marks sequences read
// from external documents rather than built here.
struct BkSequence {
  std::vector<Natural> elements;
  Natural modulus;
  unsigned k = 0;
  Construction label = Construction::custom;
  std::uint64_t size_param = 0;  // n for pow2/pow3/geometric, q for bose_chowla
  std::optional<unsigned> r;     // pow2: modulus 2^{r-2}; pow3: modulus 2*3^{r-1}
  std::optional<gfpk::Poly> field_poly;  // bose_chowla: defining polynomial
};

namespace constructions {

// r = 1 + ceil(k*log2(p_n)) with p_n the n-th odd prime, computed exactly
// as 1 + bit_length(p_n^k): p_n^k is odd and > 1, so never a power of two.
// Guarantees 2^{r-1} - 1 >= p_n^k and r >= 3.
unsigned compute_r(std::uint64_t n, unsigned k);

// { h_i | p_i == +-5^{h_i} (mod 2^r) } over the first n odd primes,
// a size-n B_k sequence in Z_{2^{r-2}}.
BkSequence construct_pow2(std::uint64_t n, unsigned k);

// Full base-2 discrete logs of the first n primes coprime to 3 in
// Z_{3^r}, with 3^r the smallest power exceeding (max prime)^k;
// a size-n B_k sequence in Z_{2*3^{r-1}}.
BkSequence construct_pow3(std::uint64_t n, unsigned k);

// Exponents d with x^d = x + alpha over GF(q^k), one per alpha in GF(q);
// a size-q B_k sequence in Z_{q^k-1}. Elements sorted ascending.
BkSequence construct_bose_chowla(const Natural& q, unsigned k,
                                 std::uint64_t field_limit = gfpk::default_field_limit);

// { k, k^2, ..., k^n } with modulus k^{n+1}: the trivial baseline with
// exponentially large elements. Requires k >= 2.
BkSequence construct_geometric(std::uint64_t n, unsigned k);

}  // namespace constructions
}  // namespace bkseq

#endif

#ifndef BKSEQ_GFPK_HPP
#define BKSEQ_GFPK_HPP

#include <cstdint>
#include <vector>

#include "bkseq/arith.hpp"

namespace bkseq::gfpk {

// Polynomial over GF(q), little-endian coefficients: index i holds the
// coefficient of x^i. Where a monic polynomial of degree k is meant, only
// the k low coefficients are stored and the leading 1 is implicit.
using Poly = std::vector<std::uint32_t>;

// Element of GF(q^k): exactly k coefficients, each < q.
using FieldElement = Poly;

inline constexpr std::uint64_t default_field_limit = std::uint64_t{1} << 24;

// GF(q^k) presented as GF(q)[x]/(f) with f monic, irreducible and
// primitive: the class of x has multiplicative order q^k - 1.
struct FieldParams {
  std::uint64_t q = 0;
  unsigned k = 0;
  Poly f;                  // c_0..c_{k-1}, implicit leading 1
  std::uint64_t order = 0; // q^k - 1
};

// Deterministic search for the first primitive monic polynomial of degree
// k: candidates are enumerated by m = 0..q^k-1, whose base-q digits give
// (c_0,...,c_{k-1}). Requires q prime, k >= 2 and q^k <= limit.
FieldParams find_primitive_poly(const Natural& q, unsigned k,
                                std::uint64_t limit = default_field_limit);

FieldElement mul(const FieldElement& a, const FieldElement& b,
                 const FieldParams& params);

FieldElement element_pow(const FieldElement& e, std::uint64_t exp,
                         const FieldParams& params);

// Multiplicative order of a nonzero element, via trial-division
// factorization of q^k - 1 and exponent checks.
std::uint64_t element_order(const FieldElement& e, const FieldParams& params);

// Trial division by every monic polynomial of degree 1..deg(f)/2.
// f is monic with implicit leading 1; its degree is f.size().
bool is_irreducible(const Poly& f, std::uint64_t q);

}  // namespace bkseq::gfpk

#endif

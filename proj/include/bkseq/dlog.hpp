#ifndef BKSEQ_DLOG_HPP
#define BKSEQ_DLOG_HPP

#include <cstdint>

#include "bkseq/arith.hpp"

namespace bkseq::dlog {

// Unit group of Z_{2^r}, r >= 3. It splits as <-1>_2 x <5>_{2^{r-2}}:
// every odd residue is (-1)^j * 5^h for unique j in {0,1}, h in [0, 2^{r-2}).
struct TwoAdicGroup {
  explicit TwoAdicGroup(unsigned r);

  unsigned r;
  Natural modulus;         // 2^r
  Natural subgroup_order;  // 2^{r-2}, the exact order of 5
  static constexpr unsigned generator = 5;
};

// Unit group of Z_{3^r}, r >= 1: cyclic of order 2*3^{r-1}, generated by 2.
struct ThreeAdicGroup {
  explicit ThreeAdicGroup(unsigned r);

  unsigned r;
  Natural modulus;      // 3^r
  Natural group_order;  // 2*3^{r-1}
  static constexpr unsigned generator = 2;
};

// x == (-1)^j * 5^h (mod 2^r).
struct DlogResult {
  unsigned j = 0;  // sign exponent, 0 or 1
  Natural h;       // exponent in the cyclic part, < 2^{r-2}
};

// Modular multiplications (squarings included) performed by a dlog call.
struct MulCount {
  std::uint64_t mults = 0;
};

// Discrete log of an odd x in [1, 2^r) by binary digit peeling.
//
// The sign is resolved first: j = 0 iff x == 1 (mod 4), and for j = 1 the
// input is replaced by 2^r - x, which lands in <5>. The bits of h are then
// recovered low to high: bit i is 0 if the current residue raised to
// 2^{r-3-i} equals 1 and 1 if it equals 2^{r-1}+1; after a set bit the
// residue is multiplied by the precomputed inverse power 5^{-2^i}.
// Costs O(r^2) modular multiplications, mostly squarings.
DlogResult dlog_2adic(const Natural& x, const TwoAdicGroup& group,
                      MulCount* count = nullptr);

// Full discrete log e in [0, 2*3^{r-1}) with 2^e == x (mod 3^r), for x
// coprime to 3. e mod 2 comes from raising x to 3^{r-1} (landing on 1 or
// 3^r - 1); e mod 3^{r-1} by ternary digit peeling against the order-3
// element 2^{2*3^{r-2}}; the two parts combine by CRT.
Natural dlog_3adic(const Natural& x, const ThreeAdicGroup& group);

}  // namespace bkseq::dlog

#endif

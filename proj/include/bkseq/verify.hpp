#ifndef BKSEQ_VERIFY_HPP
#define BKSEQ_VERIFY_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bkseq/constructions.hpp"

namespace bkseq::verify {

inline constexpr std::uint64_t default_enumeration_limit = 10'000'000;

// Two distinct k-multisets of element indices with equal sum mod N,
// certifying failure of the B_k property.
struct CollisionWitness {
  std::vector<std::uint32_t> first;   // non-decreasing tuple recorded first
  std::vector<std::uint32_t> second;  // first later tuple hitting the same sum
  Natural sum;                        // the shared residue
};

struct VerificationReport {
  bool ok = false;
  std::uint64_t sums_checked = 0;  // binom(size+k-1, k)
  std::optional<CollisionWitness> witness;
  std::chrono::duration<double> elapsed{0};
};

// Exhaustive B_k certification: enumerates every k-multiset of element
// indices in lexicographic order of non-decreasing index tuples and
// checks that all sums mod N are distinct. On failure the witness is the
// first collision in enumeration order, paired with the earlier multiset
// recorded for that sum. Throws InstanceTooLarge when binom(size+k-1, k)
// exceeds `limit`.
VerificationReport verify_bk(const BkSequence& seq,
                             std::uint64_t limit = default_enumeration_limit);

struct DensityReport {
  Natural modulus;
  Natural lower_bound;                 // binom(n+k-1, k), pigeonhole
  bool lower_ok = false;               // modulus >= lower_bound
  std::optional<Natural> upper_bound;  // p_n^k, pow2 only
  std::optional<bool> upper_ok;        // modulus < upper_bound
  double informational_bound = 0.0;    // (2n*log2(n+2))^k, not asserted
};

// Exact density verdicts (integer arithmetic) plus the informational
// floating-point bound.
DensityReport density_report(const BkSequence& seq);

}  // namespace bkseq::verify

#endif

#include "bkseq/verify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "bkseq/errors.hpp"
#include "bkseq/primes.hpp"

namespace bkseq::verify {

namespace {

// Advances a non-decreasing index tuple to its lexicographic successor.
// Returns false once the last tuple (n-1, ..., n-1) has been passed.
// `dirty` receives the lowest position whose entry changed.
bool advance_tuple(std::vector<std::uint32_t>& tuple, std::uint32_t n,
                   unsigned& dirty) {
  const unsigned k = static_cast<unsigned>(tuple.size());
  unsigned j = k;
  while (j > 0 && tuple[j - 1] == n - 1) --j;
  if (j == 0) return false;
  --j;
  const std::uint32_t v = tuple[j] + 1;
  for (unsigned l = j; l < k; ++l) tuple[l] = v;
  dirty = j;
  return true;
}

// Tuple at `rank` in the enumeration, by replaying the advance.
std::vector<std::uint32_t> tuple_at_rank(std::uint64_t rank, std::uint32_t n,
                                         unsigned k) {
  std::vector<std::uint32_t> tuple(k, 0);
  unsigned dirty = 0;
  for (std::uint64_t i = 0; i < rank; ++i) advance_tuple(tuple, n, dirty);
  return tuple;
}

struct U64Ops {
  using Sum = std::uint64_t;
  using Key = std::uint64_t;
  std::uint64_t modulus;
  Sum add(Sum a, Sum b) const { return (a + b) % modulus; }
  Key key(Sum s) const { return s; }
  Natural to_natural(Sum s) const { return Natural(s); }
};

struct NaturalOps {
  using Sum = Natural;
  using Key = std::string;
  Natural modulus;
  Sum add(const Sum& a, const Sum& b) const { return (a + b) % modulus; }
  Key key(const Sum& s) const { return s.get_str(); }
  Natural to_natural(const Sum& s) const { return s; }
};

template <class Ops>
std::optional<CollisionWitness> find_collision(
    const std::vector<typename Ops::Sum>& residues, unsigned k,
    std::uint64_t count, const Ops& ops) {
  using Sum = typename Ops::Sum;
  const std::uint32_t n = static_cast<std::uint32_t>(residues.size());

  std::vector<std::uint32_t> tuple(k, 0);
  std::vector<Sum> prefix(k + 1, Sum{});
  auto recompute_from = [&](unsigned pos) {
    for (unsigned j = pos; j < k; ++j) {
      prefix[j + 1] = ops.add(prefix[j], residues[tuple[j]]);
    }
  };
  recompute_from(0);

  std::unordered_map<typename Ops::Key, std::uint64_t> seen;
  seen.reserve(count);

  std::uint64_t rank = 0;
  for (;;) {
    const auto [it, inserted] = seen.emplace(ops.key(prefix[k]), rank);
    if (!inserted) {
      CollisionWitness w;
      w.first = tuple_at_rank(it->second, n, k);
      w.second = tuple;
      w.sum = ops.to_natural(prefix[k]);
      return w;
    }
    unsigned dirty = 0;
    if (!advance_tuple(tuple, n, dirty)) break;
    recompute_from(dirty);
    ++rank;
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_bk(const BkSequence& seq, std::uint64_t limit) {
  if (seq.k == 0) {
    throw std::invalid_argument("verify_bk: k must be >= 1");
  }
  if (seq.modulus < 2) {
    throw std::invalid_argument("verify_bk: modulus must be >= 2");
  }
  if (seq.elements.size() >= (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("verify_bk: too many elements for index witnesses");
  }
  const auto t0 = std::chrono::steady_clock::now();

  const std::uint64_t n = seq.elements.size();
  const Natural count_exact = arith::binom(n + seq.k - 1, seq.k);
  if (count_exact > Natural(limit)) {
    throw InstanceTooLarge(
        "verify_bk: enumeration of " + count_exact.get_str() +
            " multisets exceeds the limit of " + std::to_string(limit) +
            "; raise the limit to run this instance",
        count_exact.get_str());
  }
  const std::uint64_t count = mpz_get_ui(count_exact.get_mpz_t());

  VerificationReport report;
  report.sums_checked = count;

  std::optional<CollisionWitness> witness;
  if (count > 0) {
    // Machine-word fast path whenever sums cannot overflow 64 bits.
    if (seq.modulus <= (Natural(1) << 63)) {
      U64Ops ops{mpz_get_ui(Natural(seq.modulus).get_mpz_t())};
      std::vector<std::uint64_t> residues;
      residues.reserve(n);
      for (const Natural& e : seq.elements) {
        residues.push_back(mpz_get_ui(Natural(e % seq.modulus).get_mpz_t()));
      }
      witness = find_collision(residues, seq.k, count, ops);
    } else {
      NaturalOps ops{seq.modulus};
      std::vector<Natural> residues;
      residues.reserve(n);
      for (const Natural& e : seq.elements) residues.push_back(e % seq.modulus);
      witness = find_collision(residues, seq.k, count, ops);
    }
  }

  report.ok = !witness.has_value();
  report.witness = std::move(witness);
  if (report.ok && seq.modulus < count_exact) {
    // Impossible: count distinct residues require modulus >= count.
    throw std::logic_error("verify_bk: passing sequence violates pigeonhole");
  }
  report.elapsed = std::chrono::steady_clock::now() - t0;
  return report;
}

DensityReport density_report(const BkSequence& seq) {
  const std::uint64_t n = seq.elements.size();
  const unsigned k = seq.k;

  DensityReport report;
  report.modulus = seq.modulus;
  report.lower_bound = arith::binom(n + k - 1, k);
  report.lower_ok = seq.modulus >= report.lower_bound;
  if (seq.label == Construction::pow2) {
    const primes::FactorBase fb = primes::first_primes_coprime_to(2, n);
    report.upper_bound = arith::pow(Natural(fb.primes.back()), k);
    report.upper_ok = seq.modulus < *report.upper_bound;
  }
  const double nn = static_cast<double>(n);
  report.informational_bound =
      std::pow(2.0 * nn * std::log2(nn + 2.0), static_cast<double>(k));
  return report;
}

}  // namespace bkseq::verify

#include "bkseq/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "bkseq/dlog.hpp"
#include "bkseq/errors.hpp"
#include "bkseq/primes.hpp"

namespace bkseq {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::pow2: return "pow2";
    case Construction::pow3: return "pow3";
    case Construction::bose_chowla: return "bose_chowla";
    case Construction::geometric: return "geometric";
    case Construction::custom: return "custom";
  }
  throw std::logic_error("to_string: bad construction tag");
}

Construction construction_from_string(const std::string& tag) {
  if (tag == "pow2") return Construction::pow2;
  if (tag == "pow3") return Construction::pow3;
  if (tag == "bose_chowla") return Construction::bose_chowla;
  if (tag == "geometric") return Construction::geometric;
  if (tag == "custom") return Construction::custom;
  throw std::invalid_argument("unknown construction tag: " + tag);
}

namespace constructions {

unsigned compute_r(std::uint64_t n, unsigned k) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("compute_r: n and k must be >= 1");
  }
  const primes::FactorBase fb = primes::first_primes_coprime_to(2, n);
  const Natural pn_k = arith::pow(Natural(fb.primes.back()), k);
  return 1 + static_cast<unsigned>(arith::bit_length(pn_k));
}

BkSequence construct_pow2(std::uint64_t n, unsigned k) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("construct_pow2: n and k must be >= 1");
  }
  const primes::FactorBase fb = primes::first_primes_coprime_to(2, n);
  const unsigned r = compute_r(n, k);
  const dlog::TwoAdicGroup group(r);

  BkSequence seq;
  seq.label = Construction::pow2;
  seq.k = k;
  seq.size_param = n;
  seq.r = r;
  seq.modulus = group.subgroup_order;  // 2^{r-2}
  seq.elements.reserve(n);
  for (std::uint64_t p : fb.primes) {
    seq.elements.push_back(dlog::dlog_2adic(Natural(p), group).h);
  }
  return seq;
}

BkSequence construct_pow3(std::uint64_t n, unsigned k) {
  if (n == 0 || k == 0) {
    throw std::invalid_argument("construct_pow3: n and k must be >= 1");
  }
  const primes::FactorBase fb = primes::first_primes_coprime_to(3, n);

  // Smallest r with 3^r > (max prime)^k; products of k factor-base
  // elements then stay below 3^r and keep distinct residues.
  const Natural bound = arith::pow(Natural(fb.primes.back()), k);
  unsigned r = 1;
  Natural power = 3;
  while (power <= bound) {
    power *= 3;
    ++r;
  }
  const dlog::ThreeAdicGroup group(r);

  BkSequence seq;
  seq.label = Construction::pow3;
  seq.k = k;
  seq.size_param = n;
  seq.r = r;
  seq.modulus = group.group_order;  // 2*3^{r-1}
  seq.elements.reserve(n);
  for (std::uint64_t p : fb.primes) {
    seq.elements.push_back(dlog::dlog_3adic(Natural(p), group));
  }
  return seq;
}

BkSequence construct_bose_chowla(const Natural& q, unsigned k,
                                 std::uint64_t field_limit) {
  const gfpk::FieldParams params = gfpk::find_primitive_poly(q, k, field_limit);

  // One pass over x^t, t = 1..q^k-2, recording t whenever x^t - x is a
  // constant polynomial. t = 1 itself covers alpha = 0.
  std::vector<std::uint64_t> exponents;
  exponents.reserve(params.q);
  exponents.push_back(1);

  gfpk::FieldElement x(params.k, 0);
  x[1] = 1;
  gfpk::FieldElement cur = x;
  for (std::uint64_t t = 2; t <= params.order - 1; ++t) {
    cur = gfpk::mul(cur, x, params);
    bool affine = (cur[1] == 1);
    for (unsigned j = 2; affine && j < params.k; ++j) {
      if (cur[j] != 0) affine = false;
    }
    if (affine) exponents.push_back(t);
  }
  if (exponents.size() != params.q) {
    throw std::logic_error("construct_bose_chowla: expected exactly q exponents");
  }
  std::sort(exponents.begin(), exponents.end());

  BkSequence seq;
  seq.label = Construction::bose_chowla;
  seq.k = k;
  seq.size_param = params.q;
  seq.field_poly = params.f;
  seq.modulus = Natural(params.order);
  seq.elements.reserve(params.q);
  for (std::uint64_t d : exponents) seq.elements.emplace_back(d);
  return seq;
}

BkSequence construct_geometric(std::uint64_t n, unsigned k) {
  if (n == 0) {
    throw std::invalid_argument("construct_geometric: n must be >= 1");
  }
  if (k < 2) {
    throw std::invalid_argument("construct_geometric: k must be >= 2");
  }
  BkSequence seq;
  seq.label = Construction::geometric;
  seq.k = k;
  seq.size_param = n;
  seq.modulus = arith::pow(Natural(k), n + 1);
  seq.elements.reserve(n);
  for (std::uint64_t e = 1; e <= n; ++e) {
    seq.elements.push_back(arith::pow(Natural(k), e));
  }
  return seq;
}

}  // namespace constructions
}  // namespace bkseq

#include "bkseq/gfpk.hpp"

#include <algorithm>
#include <stdexcept>

#include "bkseq/errors.hpp"
#include "bkseq/primes.hpp"

namespace bkseq::gfpk {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Base-q digits of m, lowest first, padded to `width`.
Poly digits_base_q(std::uint64_t m, std::uint64_t q, unsigned width) {
  Poly out(width, 0);
  for (unsigned i = 0; i < width; ++i) {
    out[i] = static_cast<std::uint32_t>(m % q);
    m /= q;
  }
  return out;
}

// Remainder of monic `f` (degree f.size(), implicit leading 1) under
// division by monic `g` (degree g.size(), implicit leading 1). Returns
// true when the remainder is zero.
bool divides(const Poly& g, const Poly& f, std::uint64_t q) {
  const unsigned fdeg = static_cast<unsigned>(f.size());
  const unsigned gdeg = static_cast<unsigned>(g.size());
  // Work on the full coefficient vector including the leading 1.
  std::vector<std::uint64_t> rem(f.begin(), f.end());
  rem.push_back(1);
  for (unsigned top = fdeg; top >= gdeg; --top) {
    const std::uint64_t c = rem[top] % q;
    rem[top] = 0;
    if (c == 0) continue;
    for (unsigned j = 0; j < gdeg; ++j) {
      // Subtract c * g[j] at position top - gdeg + j.
      const std::uint64_t sub = (c * (q - g[j] % q)) % q;
      rem[top - gdeg + j] = (rem[top - gdeg + j] + sub) % q;
    }
  }
  for (unsigned j = 0; j < gdeg; ++j) {
    if (rem[j] % q != 0) return false;
  }
  return true;
}

bool is_one(const FieldElement& e) {
  if (e.empty() || e[0] != 1) return false;
  return std::all_of(e.begin() + 1, e.end(), [](std::uint32_t c) { return c == 0; });
}

bool is_zero(const FieldElement& e) {
  return std::all_of(e.begin(), e.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement one_element(unsigned k) {
  FieldElement e(k, 0);
  e[0] = 1;
  return e;
}

FieldElement x_element(unsigned k) {
  FieldElement e(k, 0);
  e[1] = 1;
  return e;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint64_t q) {
  const unsigned k = static_cast<unsigned>(f.size());
  if (k == 1) return true;  // monic linear polynomials
  for (unsigned d = 1; d <= k / 2; ++d) {
    std::uint64_t candidates = 1;
    for (unsigned i = 0; i < d; ++i) candidates *= q;
    for (std::uint64_t m = 0; m < candidates; ++m) {
      if (divides(digits_base_q(m, q, d), f, q)) return false;
    }
  }
  return true;
}

FieldElement mul(const FieldElement& a, const FieldElement& b,
                 const FieldParams& params) {
  const unsigned k = params.k;
  const std::uint64_t q = params.q;

  // Schoolbook product; coefficients < 2^24 and k <= 24 keep every
  // accumulation below 2^54.
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    }
  }
  // Reduce top-down with x^k == -(c_{k-1} x^{k-1} + ... + c_0).
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    const std::uint64_t c = prod[d] % q;
    prod[d] = 0;
    if (c == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[d - k + j] = (prod[d - k + j] + c * ((q - params.f[j] % q) % q)) % q;
    }
  }
  FieldElement out(k);
  for (unsigned i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i] % q);
  return out;
}

FieldElement element_pow(const FieldElement& e, std::uint64_t exp,
                         const FieldParams& params) {
  FieldElement result = one_element(params.k);
  FieldElement base = e;
  while (exp > 0) {
    if (exp & 1) result = mul(result, base, params);
    base = mul(base, base, params);
    exp >>= 1;
  }
  return result;
}

std::uint64_t element_order(const FieldElement& e, const FieldParams& params) {
  if (is_zero(e)) {
    throw std::invalid_argument("element_order: the zero element has no order");
  }
  std::uint64_t order = params.order;
  for (std::uint64_t ell : prime_factors(params.order)) {
    while (order % ell == 0 && is_one(element_pow(e, order / ell, params))) {
      order /= ell;
    }
  }
  return order;
}

FieldParams find_primitive_poly(const Natural& q, unsigned k, std::uint64_t limit) {
  if (k < 2) {
    throw std::invalid_argument("find_primitive_poly: k must be >= 2");
  }
  if (!primes::is_prime(q)) {
    throw std::invalid_argument("find_primitive_poly: q must be prime");
  }
  // q^k <= limit, checked without overflow.
  if (q > limit) {
    throw InstanceTooLarge("find_primitive_poly: q^k exceeds the field limit",
                           arith::to_decimal(arith::pow(q, k)));
  }
  const std::uint64_t qu = mpz_get_ui(q.get_mpz_t());
  std::uint64_t card = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (card > limit / qu) {
      throw InstanceTooLarge("find_primitive_poly: q^k exceeds the field limit",
                             arith::to_decimal(arith::pow(q, k)));
    }
    card *= qu;
  }

  FieldParams params;
  params.q = qu;
  params.k = k;
  params.order = card - 1;

  const std::vector<std::uint64_t> ells = prime_factors(params.order);
  for (std::uint64_t m = 0; m < card; ++m) {
    Poly candidate = digits_base_q(m, qu, k);
    if (!is_irreducible(candidate, qu)) continue;
    params.f = std::move(candidate);
    // Primitivity: the class of x misses every maximal proper subgroup.
    const FieldElement x = x_element(k);
    bool primitive = true;
    for (std::uint64_t ell : ells) {
      if (is_one(element_pow(x, params.order / ell, params))) {
        primitive = false;
        break;
      }
    }
    if (primitive) return params;
  }
  throw std::logic_error("find_primitive_poly: no primitive polynomial found");
}

}  // namespace bkseq::gfpk

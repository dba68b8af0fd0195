#include "bkseq/dlog.hpp"

#include <stdexcept>

namespace bkseq::dlog {

namespace {

Natural mul_mod(const Natural& a, const Natural& b, const Natural& m, MulCount* count) {
  if (count) ++count->mults;
  return (a * b) % m;
}

// y^(2^t) mod m, t squarings.
Natural pow_2exp(Natural y, unsigned t, const Natural& m, MulCount* count) {
  for (unsigned i = 0; i < t; ++i) y = mul_mod(y, y, m, count);
  return y;
}

}  // namespace

TwoAdicGroup::TwoAdicGroup(unsigned r_) : r(r_) {
  if (r < 3) {
    throw std::invalid_argument("TwoAdicGroup: r must be >= 3");
  }
  modulus = Natural(1) << r;
  subgroup_order = Natural(1) << (r - 2);
}

ThreeAdicGroup::ThreeAdicGroup(unsigned r_) : r(r_) {
  if (r < 1) {
    throw std::invalid_argument("ThreeAdicGroup: r must be >= 1");
  }
  modulus = arith::pow(Natural(3), r);
  group_order = 2 * arith::pow(Natural(3), r - 1);
}

DlogResult dlog_2adic(const Natural& x, const TwoAdicGroup& group, MulCount* count) {
  if (x % 2 == 0) {
    throw std::invalid_argument("dlog_2adic: x must be odd");
  }
  if (x < 1 || x >= group.modulus) {
    throw std::invalid_argument("dlog_2adic: x must lie in [1, 2^r)");
  }

  DlogResult result;
  // <5> mod 2^r is exactly the residues == 1 (mod 4), so the sign component
  // is decided by x mod 4; for j = 1, negation moves x into <5>.
  Natural y;
  if (x % 4 == 1) {
    result.j = 0;
    y = x;
  } else {
    result.j = 1;
    y = group.modulus - x;
  }

  const unsigned digits = group.r - 2;  // h has r-2 binary digits
  const Natural half_plus_one = (Natural(1) << (group.r - 1)) + 1;  // 5^{2^{r-3}}

  Natural inv_pow = arith::mod_inv(Natural(TwoAdicGroup::generator), group.modulus);
  Natural h = 0;
  for (unsigned i = 0; i < digits; ++i) {
    // Project onto the order-2 subgroup: z = y^{2^{r-3-i}} is 1 or 2^{r-1}+1.
    const Natural z = pow_2exp(y, digits - 1 - i, group.modulus, count);
    if (z == half_plus_one) {
      mpz_setbit(h.get_mpz_t(), i);
      y = mul_mod(y, inv_pow, group.modulus, count);
    } else if (z != 1) {
      // Unreachable once the sign is normalized: every residue == 1 (mod 4)
      // lies in <5>.
      throw std::logic_error("dlog_2adic: residue escaped <5>");
    }
    if (i + 1 < digits) {
      inv_pow = mul_mod(inv_pow, inv_pow, group.modulus, count);  // 5^{-2^{i+1}}
    }
  }
  result.h = h;
  return result;
}

Natural dlog_3adic(const Natural& x, const ThreeAdicGroup& group) {
  if (x < 1 || x >= group.modulus) {
    throw std::invalid_argument("dlog_3adic: x must lie in [1, 3^r)");
  }
  if (x % 3 == 0) {
    throw std::invalid_argument("dlog_3adic: x must be coprime to 3");
  }

  const unsigned r = group.r;
  const Natural cyclic_part = arith::pow(Natural(3), r - 1);  // 3^{r-1}

  // Parity of the exponent: x^{3^{r-1}} is (-1)^e.
  const Natural parity_probe = arith::mod_pow(x, cyclic_part, group.modulus);
  unsigned e_mod_2;
  if (parity_probe == 1) {
    e_mod_2 = 0;
  } else if (parity_probe == group.modulus - 1) {
    e_mod_2 = 1;
  } else {
    throw std::logic_error("dlog_3adic: parity probe off the order-2 subgroup");
  }

  // Ternary digits of e mod 3^{r-1}, peeled low to high against the
  // order-3 element omega = 2^{2*3^{r-2}}.
  Natural s = 0;
  if (r >= 2) {
    const Natural omega =
        arith::mod_pow(Natural(ThreeAdicGroup::generator),
                       2 * arith::pow(Natural(3), r - 2), group.modulus);
    const Natural omega2 = (omega * omega) % group.modulus;

    const Natural inv2 =
        arith::mod_inv(Natural(ThreeAdicGroup::generator), group.modulus);
    Natural inv_pow = inv2;       // 2^{-3^i}
    Natural place_value = 1;      // 3^i
    Natural y = x;
    for (unsigned i = 0; i + 1 < r; ++i) {
      const Natural probe_exp = 2 * arith::pow(Natural(3), r - 2 - i);
      const Natural z = arith::mod_pow(y, probe_exp, group.modulus);
      unsigned digit;
      if (z == 1) {
        digit = 0;
      } else if (z == omega) {
        digit = 1;
      } else if (z == omega2) {
        digit = 2;
      } else {
        throw std::logic_error("dlog_3adic: probe off the order-3 subgroup");
      }
      if (digit != 0) {
        s += digit * place_value;
        y = (y * arith::mod_pow(inv_pow, Natural(digit), group.modulus)) %
            group.modulus;
      }
      if (i + 2 < r) {
        inv_pow = arith::mod_pow(inv_pow, Natural(3), group.modulus);
        place_value *= 3;
      }
    }
  }

  // CRT: e == e_mod_2 (mod 2) and e == s (mod 3^{r-1}); 3^{r-1} is odd,
  // so adding it flips parity when needed.
  Natural e = s;
  const bool s_odd = (s % 2 == 1);
  if (s_odd != (e_mod_2 == 1)) {
    e += cyclic_part;
  }
  return e;
}

}  // namespace bkseq::dlog

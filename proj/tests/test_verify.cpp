#include "bkseq/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "bkseq/arith.hpp"
#include "bkseq/constructions.hpp"
#include "bkseq/errors.hpp"

using bkseq::BkSequence;
using bkseq::Construction;
using bkseq::InstanceTooLarge;
using bkseq::Natural;
namespace arith = bkseq::arith;
namespace constructions = bkseq::constructions;
namespace verify = bkseq::verify;

namespace {

BkSequence custom(std::initializer_list<long> elements, long modulus, unsigned k) {
  BkSequence seq;
  seq.elements.assign(elements.begin(), elements.end());
  seq.modulus = modulus;
  seq.k = k;
  return seq;
}

// Independent of the library's odometer: recursive enumeration of all
// non-decreasing index tuples, collecting residues into a set.
bool oracle_is_bk(const std::vector<Natural>& elems, unsigned k,
                  const Natural& modulus) {
  std::set<Natural> sums;
  bool distinct = true;
  std::function<void(std::size_t, unsigned, const Natural&)> rec =
      [&](std::size_t start, unsigned left, const Natural& acc) {
        if (!distinct) return;
        if (left == 0) {
          if (!sums.insert(Natural(acc % modulus)).second) distinct = false;
          return;
        }
        for (std::size_t i = start; i < elems.size(); ++i) {
          rec(i, left - 1, Natural(acc + elems[i]));
        }
      };
  rec(0, k, Natural(0));
  return distinct;
}

void check_witness_valid(const BkSequence& seq,
                         const verify::CollisionWitness& w) {
  REQUIRE(w.first.size() == seq.k);
  REQUIRE(w.second.size() == seq.k);
  CHECK(w.first != w.second);
  CHECK(std::is_sorted(w.first.begin(), w.first.end()));
  CHECK(std::is_sorted(w.second.begin(), w.second.end()));
  Natural a = 0;
  Natural b = 0;
  for (const std::uint32_t i : w.first) {
    REQUIRE(i < seq.elements.size());
    a += seq.elements[i];
  }
  for (const std::uint32_t i : w.second) {
    REQUIRE(i < seq.elements.size());
    b += seq.elements[i];
  }
  CHECK(Natural(a % seq.modulus) == Natural(b % seq.modulus));
  CHECK(Natural(a % seq.modulus) == w.sum);
}

}  // namespace

TEST_CASE("verify_bk passes the standard small sequences") {
  const auto r1 = verify::verify_bk(custom({3, 1}, 16, 2));
  CHECK(r1.ok);
  CHECK(r1.sums_checked == 3);
  CHECK_FALSE(r1.witness.has_value());

  const auto r2 = verify::verify_bk(custom({2, 4, 8, 16}, 32, 2));
  CHECK(r2.ok);
  CHECK(r2.sums_checked == 10);

  const auto r3 = verify::verify_bk(custom({1, 6, 7}, 8, 2));
  CHECK(r3.ok);
  CHECK(r3.sums_checked == 6);
}

TEST_CASE("verify_bk reports the first collision with index tuples") {
  // {0,1,2} mod 10: 0+2 == 1+1, hit at tuple (1,1) after (0,2).
  const auto report = verify::verify_bk(custom({0, 1, 2}, 10, 2));
  CHECK_FALSE(report.ok);
  CHECK(report.sums_checked == 6);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first == std::vector<std::uint32_t>{0, 2});
  CHECK(report.witness->second == std::vector<std::uint32_t>{1, 1});
  CHECK(report.witness->sum == 2);
}

TEST_CASE("verify_bk handles k = 1 as plain distinctness") {
  CHECK(verify::verify_bk(custom({1, 2, 3}, 10, 1)).ok);

  const auto dup = verify::verify_bk(custom({1, 1}, 10, 1));
  CHECK_FALSE(dup.ok);
  REQUIRE(dup.witness.has_value());
  CHECK(dup.witness->first == std::vector<std::uint32_t>{0});
  CHECK(dup.witness->second == std::vector<std::uint32_t>{1});
  CHECK(dup.witness->sum == 1);
}

TEST_CASE("verify_bk reduces elements modulo N before summing") {
  // 35 == 3 (mod 16), so this is {3,1} again.
  CHECK(verify::verify_bk(custom({35, 1}, 16, 2)).ok);
  // 19 == 3 (mod 16): a duplicate in disguise.
  const auto report = verify::verify_bk(custom({3, 19}, 16, 2));
  CHECK_FALSE(report.ok);
  check_witness_valid(custom({3, 19}, 16, 2), *report.witness);
}

TEST_CASE("planting an element breaks a B_2 set with a valid witness") {
  const BkSequence planted = custom({2, 4, 8, 16, 6}, 32, 2);  // 2+8 == 4+6
  const auto report = verify::verify_bk(planted);
  CHECK_FALSE(report.ok);
  CHECK(report.sums_checked == 15);
  REQUIRE(report.witness.has_value());
  check_witness_valid(planted, *report.witness);

  const auto again = verify::verify_bk(planted);
  REQUIRE(again.witness.has_value());
  CHECK(again.witness->first == report.witness->first);
  CHECK(again.witness->second == report.witness->second);
  CHECK(again.witness->sum == report.witness->sum);
}

TEST_CASE("sums_checked always equals binom(n+k-1, k)") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (unsigned k = 1; k <= 4; ++k) {
      const Natural expected = arith::binom(n + k - 1, k);

      BkSequence good = constructions::construct_geometric(n, 3);
      good.k = k;  // the count law holds whether or not the property does
      const auto report = verify::verify_bk(good);
      CHECK(Natural(report.sums_checked) == expected);

      BkSequence bad = good;
      bad.elements.push_back(bad.elements.front());  // duplicate => collision
      const auto bad_report = verify::verify_bk(bad);
      CHECK_FALSE(bad_report.ok);
      CHECK(Natural(bad_report.sums_checked) ==
            arith::binom(n + 1 + k - 1, k));
    }
  }
}

TEST_CASE("verify_bk agrees with a recursive set-based oracle") {
  std::mt19937 rng(12345);
  int mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng() % 5;
    const unsigned k = 1 + rng() % 3;
    const long modulus = 2 + static_cast<long>(rng() % 39);
    BkSequence seq;
    seq.modulus = modulus;
    seq.k = k;
    for (std::uint64_t i = 0; i < n; ++i) {
      seq.elements.emplace_back(static_cast<long>(rng() % (2 * modulus)));
    }
    const auto report = verify::verify_bk(seq);
    if (report.ok != oracle_is_bk(seq.elements, k, seq.modulus)) ++mismatches;
    if (!report.ok) check_witness_valid(seq, *report.witness);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("translation and unit dilation preserve the B_k property") {
  const BkSequence base = constructions::construct_pow2(8, 2);
  REQUIRE(verify::verify_bk(base).ok);

  BkSequence translated = base;
  translated.label = Construction::custom;
  for (Natural& e : translated.elements) {
    e = Natural((e + 11) % base.modulus);
  }
  CHECK(verify::verify_bk(translated).ok);

  BkSequence dilated = base;
  dilated.label = Construction::custom;
  for (Natural& e : dilated.elements) {
    e = Natural((e * 9) % base.modulus);  // 9 is odd, hence a unit mod 2^m
  }
  CHECK(verify::verify_bk(dilated).ok);
}

TEST_CASE("verify_bk enforces the enumeration limit") {
  const BkSequence seq = constructions::construct_geometric(4, 2);  // 10 sums
  CHECK(verify::verify_bk(seq, 10).ok);  // boundary: exactly at the limit
  try {
    verify::verify_bk(seq, 9);
    FAIL("expected InstanceTooLarge");
  } catch (const InstanceTooLarge& e) {
    CHECK(e.required == "10");
  }
}

TEST_CASE("verify_bk big-modulus path matches the word-sized path") {
  // Same collision as {0,1,2} mod 10, but forced onto the bignum path.
  BkSequence seq = custom({0, 1, 2}, 10, 2);
  seq.modulus = Natural(1) << 70;
  const auto report = verify::verify_bk(seq);
  CHECK_FALSE(report.ok);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->first == std::vector<std::uint32_t>{0, 2});
  CHECK(report.witness->second == std::vector<std::uint32_t>{1, 1});
  CHECK(report.witness->sum == 2);

  // A passing instance with modulus 3^41 > 2^63.
  const BkSequence big = constructions::construct_geometric(40, 3);
  REQUIRE(big.modulus > (Natural(1) << 63));
  const auto big_report = verify::verify_bk(big);
  CHECK(big_report.ok);
  CHECK(Natural(big_report.sums_checked) == arith::binom(42, 3));
}

TEST_CASE("verify_bk rejects degenerate inputs") {
  CHECK_THROWS_AS(verify::verify_bk(custom({1, 2}, 10, 0)), std::invalid_argument);
  CHECK_THROWS_AS(verify::verify_bk(custom({1, 2}, 1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(verify::verify_bk(custom({1, 2}, 0, 2)), std::invalid_argument);
}

TEST_CASE("verify_bk accepts the empty sequence") {
  const auto report = verify::verify_bk(custom({}, 7, 3));
  CHECK(report.ok);
  CHECK(report.sums_checked == 0);
  CHECK_FALSE(report.witness.has_value());
}

TEST_CASE("density_report on pow2 includes both exact bounds") {
  const BkSequence seq = constructions::construct_pow2(5, 2);  // p_5 = 13
  const auto report = verify::density_report(seq);
  CHECK(report.modulus == 128);
  CHECK(report.lower_bound == 15);
  CHECK(report.lower_ok);
  REQUIRE(report.upper_bound.has_value());
  CHECK(*report.upper_bound == 169);
  REQUIRE(report.upper_ok.has_value());
  CHECK(*report.upper_ok);
  CHECK(report.informational_bound > 0.0);
}

TEST_CASE("density_report on other constructions has no upper verdict") {
  const auto geo = verify::density_report(constructions::construct_geometric(4, 2));
  CHECK(geo.modulus == 32);
  CHECK(geo.lower_bound == 10);
  CHECK(geo.lower_ok);
  CHECK_FALSE(geo.upper_bound.has_value());
  CHECK_FALSE(geo.upper_ok.has_value());

  const auto bose = verify::density_report(constructions::construct_bose_chowla(7, 2));
  CHECK(bose.modulus == 48);
  CHECK(bose.lower_bound == 28);
  CHECK(bose.lower_ok);
  CHECK_FALSE(bose.upper_bound.has_value());
}

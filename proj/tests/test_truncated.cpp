#include "doctest.h"
#include "oracles.hpp"

#include <spinchern/error.hpp>
#include <spinchern/truncated_poly.hpp>

using namespace spinchern;

namespace {

TruncatedPoly poly(CoeffRing ring, int cutoff, std::vector<long> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return TruncatedPoly::from_coefficients(ring, cutoff, std::move(v));
}

TruncatedPoly random_poly(oracle::Rng& rng, CoeffRing ring, int cutoff, bool unit) {
  std::vector<BigInt> v(cutoff + 1);
  for (auto& c : v) c = rng.uniform(-4, 4);
  if (unit) v[0] = ring == CoeffRing::Integers && rng.uniform(0, 1) ? -1 : 1;
  return TruncatedPoly::from_coefficients(ring, cutoff, std::move(v));
}

}  // namespace

TEST_CASE("trunc_pow of 1 - u^2") {
  const auto base = poly(CoeffRing::Integers, 16, {1, 0, -1});
  const auto p = trunc_pow(base, 8);
  for (int k = 0; k <= 16; ++k) {
    BigInt expected = 0;
    if (k % 2 == 0) expected = oracle::pascal_binomial(8, k / 2) * (k / 2 % 2 ? -1 : 1);
    CHECK(p.coefficient(k) == expected);
  }
  CHECK(p.to_string() == "1 - 8*u^2 + 28*u^4 - 56*u^6 + 70*u^8 - 56*u^10 + 28*u^12 - 8*u^14 + u^16");
  CHECK(trunc_pow(base, 0).is_one());
}

TEST_CASE("trunc_pow agrees with repeated multiplication") {
  oracle::Rng rng(3);
  for (auto ring : {CoeffRing::Integers, CoeffRing::Mod2})
    for (int trial = 0; trial < 40; ++trial) {
      const int cutoff = rng.uniform(0, 12);
      const auto a = random_poly(rng, ring, cutoff, false);
      const unsigned k = rng.uniform(0, 9);
      auto expected = TruncatedPoly::one(ring, cutoff);
      for (unsigned r = 0; r < k; ++r) expected = trunc_mul(expected, a);
      CHECK(trunc_pow(a, k) == expected);
    }
}

TEST_CASE("trunc_inverse") {
  const auto inv = trunc_inverse(poly(CoeffRing::Mod2, 4, {1, 1}));
  CHECK(inv == poly(CoeffRing::Mod2, 4, {1, 1, 1, 1, 1}));
  CHECK(inv.to_string() == "1 + u + u^2 + u^3 + u^4");

  const auto inv_z = trunc_inverse(poly(CoeffRing::Integers, 5, {1, 2}));
  CHECK(inv_z == poly(CoeffRing::Integers, 5, {1, -2, 4, -8, 16, -32}));

  try {
    (void)trunc_inverse(poly(CoeffRing::Integers, 3, {2, 1}));
    FAIL("expected NotUnit");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnit);
  }
  CHECK_THROWS_AS(trunc_inverse(poly(CoeffRing::Mod2, 3, {0, 1})), Error);
}

TEST_CASE("identity and mismatch") {
  const auto p = poly(CoeffRing::Integers, 6, {1, 3, 0, -2});
  CHECK(trunc_mul(p, TruncatedPoly::one(CoeffRing::Integers, 6)) == p);
  CHECK_THROWS_AS(trunc_mul(p, TruncatedPoly::one(CoeffRing::Integers, 5)), Error);
  CHECK_THROWS_AS(trunc_mul(p, TruncatedPoly::one(CoeffRing::Mod2, 6)), Error);
  CHECK_THROWS_AS(p + TruncatedPoly::one(CoeffRing::Mod2, 6), Error);
  CHECK_THROWS_AS(p.truncated(7), Error);
}

TEST_CASE("mod 2 coefficients stay in {0, 1}") {
  const auto p = poly(CoeffRing::Mod2, 4, {3, -1, 2, 5});
  CHECK(p == poly(CoeffRing::Mod2, 4, {1, 1, 0, 1}));
  CHECK(p.support() == std::vector<int>{0, 1, 3});
  CHECK((p + p).degree() == -1);
  CHECK(poly(CoeffRing::Mod2, 4, {}).to_string() == "0");
}

TEST_CASE("inverse round trip on random units") {
  oracle::Rng rng(5);
  for (auto ring : {CoeffRing::Integers, CoeffRing::Mod2})
    for (int trial = 0; trial < 100; ++trial) {
      const int cutoff = rng.uniform(0, 15);
      const auto a = random_poly(rng, ring, cutoff, true);
      const auto inv = trunc_inverse(a);
      CHECK(trunc_mul(a, inv).is_one());
      CHECK(trunc_mul(inv, a).is_one());
    }
}

TEST_CASE("truncation coherence") {
  oracle::Rng rng(9);
  for (auto ring : {CoeffRing::Integers, CoeffRing::Mod2})
    for (int trial = 0; trial < 100; ++trial) {
      const int big = rng.uniform(1, 20);
      const int small = rng.uniform(0, big);
      const auto a = random_poly(rng, ring, big, true);
      const auto b = random_poly(rng, ring, big, false);
      const unsigned k = rng.uniform(0, 6);
      CHECK(trunc_mul(a, b).truncated(small) == trunc_mul(a.truncated(small), b.truncated(small)));
      CHECK(trunc_pow(a, k).truncated(small) == trunc_pow(a.truncated(small), k));
      CHECK(trunc_inverse(a).truncated(small) == trunc_inverse(a.truncated(small)));
      CHECK((a + b).truncated(small) == a.truncated(small) + b.truncated(small));
    }
}

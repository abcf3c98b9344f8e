#include "doctest.h"
#include "oracles.hpp"

#include <spinchern/error.hpp>
#include <spinchern/spin_reps.hpp>
#include <spinchern/steenrod.hpp>

#include <vector>

using namespace spinchern;

namespace {

GradedPolyF2 w(int j, int n, bool oriented = true) { return GradedPolyF2::generator(j, n, oriented); }

GradedPolyF2 mono(std::vector<int> idx, int n, bool oriented = true) {
  return GradedPolyF2::from_monomial(SWMonomial(std::move(idx)), n, oriented);
}

// Random monomial of degree <= max_degree in w_lo..w_n.
GradedPolyF2 random_monomial(oracle::Rng& rng, int n, bool oriented, int max_degree) {
  std::vector<int> idx;
  int deg = 0;
  const int factors = rng.uniform(0, 4);
  const int lo = oriented ? 2 : 1;
  for (int f = 0; f < factors; ++f) {
    const int j = rng.uniform(lo, n);
    if (deg + j > max_degree) break;
    idx.push_back(j);
    deg += j;
  }
  return mono(idx, n, oriented);
}

GradedPolyF2 random_homogeneous(oracle::Rng& rng, int n, bool oriented, int max_degree) {
  auto p = random_monomial(rng, n, oriented, max_degree);
  if (p.is_zero()) return p;
  const int d = p.degree();
  for (int t = 0; t < 3; ++t) {
    auto q = random_monomial(rng, n, oriented, d);
    if (!q.is_zero() && q.degree() == d) p += q;
  }
  return p;
}

}  // namespace

TEST_CASE("monomials and ring") {
  const SWMonomial m({3, 2, 3});
  CHECK(m.indices() == std::vector<int>{2, 3, 3});
  CHECK(m.degree() == 8);
  CHECK(m.to_string() == "w2*w3^2");
  CHECK(SWMonomial().to_string() == "1");
  CHECK((SWMonomial({2}) * SWMonomial({3})) == SWMonomial({2, 3}));

  const int n = 6;
  CHECK((w(2, n) + w(2, n)).is_zero());
  CHECK(w(1, n).is_zero());
  CHECK_FALSE(w(1, n, false).is_zero());
  CHECK(w(7, n).is_zero());
  CHECK((w(2, n) * w(3, n)).to_string() == "w2*w3");
  CHECK((w(2, n) + w(3, n)).is_homogeneous() == false);
  CHECK_THROWS_AS((w(2, n) + w(3, n)).degree(), Error);
  CHECK(GradedPolyF2(n).to_string() == "0");
  CHECK(GradedPolyF2::one(n).degree() == 0);
}

TEST_CASE("binomials mod 2") {
  CHECK(binomial_mod2(-1, 0));
  CHECK(binomial_mod2(5, 1));
  CHECK_FALSE(binomial_mod2(4, 1));
  CHECK(binomial_mod2(7, 3));
  CHECK_FALSE(binomial_mod2(6, 3));
  for (long a = 0; a < 40; ++a)
    for (long b = 0; b <= a; ++b) CHECK(binomial_mod2(a, b) == (oracle::pascal_binomial(a, b) % 2 == 1));
  CHECK_FALSE(binomial_mod2(3, 4));
}

TEST_CASE("Steenrod squares on generators") {
  const int n = 8;
  CHECK(sq_on_generator(1, 2, n) == w(3, n));
  CHECK(sq_on_generator(1, 2, n, false) == mono({1, 2}, n, false) + w(3, n, false));
  CHECK(sq_on_generator(2, 2, n) == mono({2, 2}, n));
  CHECK(sq_on_generator(3, 2, n).is_zero());
  CHECK(sq_on_generator(0, 5, n) == w(5, n));
  CHECK(sq_on_generator(2, 3, n) == mono({2, 3}, n) + w(5, n));
  CHECK(sq(1, mono({2, 3}, n)) == mono({3, 3}, n));
  CHECK_THROWS_AS(sq_on_generator(1, 9, n), Error);
  CHECK_THROWS_AS(sq_on_generator(1, 0, n), Error);
}

TEST_CASE("Steenrod squares agree with the splitting principle") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.uniform(2, 5);
    const auto p = random_homogeneous(rng, n, false, 8);
    const int i = rng.uniform(0, 8);
    CHECK(oracle::to_x(sq(i, p), n) == oracle::sq_x(i, oracle::to_x(p, n)));
  }
  for (int n = 1; n <= 5; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i <= j + 1; ++i) {
        const auto lhs = oracle::to_x(sq_on_generator(i, j, n, false), n);
        CHECK(lhs == oracle::sq_x(i, oracle::elementary_x(j, n)));
      }
}

TEST_CASE("orientation commutes with Sq") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.uniform(2, 9);
    const auto p = random_homogeneous(rng, n, true, 10);
    const int i = rng.uniform(0, 10);
    const auto unoriented = p.reduced(n, false);
    CHECK(sq(i, unoriented).reduced(n, true) == sq(i, p));
  }
}

TEST_CASE("Cartan coherence") {
  oracle::Rng rng(47);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.uniform(2, 10);
    const bool oriented = rng.uniform(0, 1) == 1;
    const auto a = random_monomial(rng, n, oriented, 8);
    const auto b = random_monomial(rng, n, oriented, 8);
    const int i = rng.uniform(0, 8);
    GradedPolyF2 convolution(n, oriented);
    for (int t = 0; t <= i; ++t) convolution += sq(t, a) * sq(i - t, b);
    CHECK(sq(i, a * b) == convolution);
  }
}

TEST_CASE("instability and homogeneity") {
  oracle::Rng rng(53);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = rng.uniform(2, 10);
    const bool oriented = rng.uniform(0, 1) == 1;
    const auto p = random_homogeneous(rng, n, oriented, 10);
    if (p.is_zero()) continue;
    const int d = p.degree();
    CHECK(sq(0, p) == p);
    CHECK(sq(d, p) == p * p);
    CHECK(sq(d + rng.uniform(1, 5), p).is_zero());
    const int i = rng.uniform(0, d);
    const auto s = sq(i, p);
    CHECK(s.is_homogeneous());
    if (!s.is_zero()) CHECK(s.degree() == d + i);
  }
}

TEST_CASE("J ideal generators") {
  CHECK(j_ideal_generators(10).degrees == std::vector<int>{2, 3, 5, 9, 17});
  CHECK(j_ideal_generators(9).degrees == std::vector<int>{2, 3, 5, 9});
  CHECK(j_ideal_generators(16).degrees == std::vector<int>{2, 3, 5, 9, 17, 33, 65});
  CHECK(j_ideal_generators(10).j_generators[2] == mono({2, 3}, 10) + w(5, 10));
  CHECK_THROWS_AS(j_ideal_generators(5), Error);

  for (int n = 6; n <= 16; ++n) {
    const auto p = j_ideal_generators(n);
    const int h = quillen_h(n).h;
    CHECK(p.h == h);
    CHECK(p.deg_z == quillen_h(n).deg_z);
    REQUIRE(static_cast<int>(p.j_generators.size()) == h);
    REQUIRE(static_cast<int>(p.degrees.size()) == h);
    CHECK(p.j_generators[0] == w(2, n));
    CHECK(p.j_generators[1] == w(3, n));
    for (int r = 1; r <= h; ++r) {
      CHECK(p.degrees[r - 1] == (1 << (r - 1)) + 1);
      CHECK(p.j_generators[r - 1].degree() == (1 << (r - 1)) + 1);
    }
  }
}

TEST_CASE("J generators are compatible with truncation") {
  for (int n = 6; n <= 14; ++n)
    for (int n2 = n + 1; n2 <= 16; ++n2) {
      const auto small = j_ideal_generators(n);
      const auto big = j_ideal_generators(n2);
      const std::size_t common = std::min(small.j_generators.size(), big.j_generators.size());
      for (std::size_t r = 0; r < common; ++r) CHECK(big.j_generators[r].reduced(n, true) == small.j_generators[r]);
    }
}

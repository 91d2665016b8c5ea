#include "qcwreath/exactnum.hpp"
#include "qcwreath/random.hpp"

#include <gtest/gtest.h>

using namespace qcwreath;

namespace {

const Prime kTwo(2);
const Prime kThree(3);

PruferElement pr(const Prime& p, long n, unsigned k) { return PruferElement(p, n, k); }

}  // namespace

TEST(Prime, RejectsComposites) {
  EXPECT_THROW(Prime(4), config_error);
  EXPECT_THROW(Prime(1), config_error);
  EXPECT_THROW(Prime(0), config_error);
  EXPECT_THROW(Prime(91), config_error);
  EXPECT_NO_THROW(Prime(2));
  EXPECT_NO_THROW(Prime(97));
  EXPECT_NO_THROW(Prime(4294967291ull));
}

TEST(Prime, PowersAreExactBeyond64Bits) {
  const BigInt big = kThree.power(64);
  EXPECT_EQ(big.str(), "3433683820292512484657849089281");
  EXPECT_EQ(kTwo.power(100), BigInt(1) << 100);
}

TEST(PAdicFraction, Reduce) {
  const PAdicFraction a(kTwo, 4, 2);
  EXPECT_EQ(a.numerator(), 1);
  EXPECT_EQ(a.exponent(), 0u);

  const PAdicFraction zero(kThree, 0, 5);
  EXPECT_EQ(zero.numerator(), 0);
  EXPECT_EQ(zero.exponent(), 0u);

  const PAdicFraction b(kTwo, 6, 3);
  EXPECT_EQ(b.numerator(), 3);
  EXPECT_EQ(b.exponent(), 2u);
  EXPECT_EQ(b.to_string(), "3/4");
}

TEST(PAdicFraction, NegativeNumeratorsStaySigned) {
  const PAdicFraction a(kThree, -6, 2);
  EXPECT_EQ(a.numerator(), -2);
  EXPECT_EQ(a.exponent(), 1u);
  EXPECT_EQ(PAdicFraction::parse("-10/4", kTwo), PAdicFraction(kTwo, -5, 1));
}

TEST(PruferElement, Reduce) {
  EXPECT_EQ(pr(kTwo, 5, 2), pr(kTwo, 1, 2));
  EXPECT_EQ(pr(kTwo, 5, 2).to_string(), "1/4");

  const PruferElement wrapped = pr(kThree, -1, 2);
  EXPECT_EQ(wrapped.numerator(), 8);
  EXPECT_EQ(wrapped.exponent(), 2u);

  const PruferElement zero = pr(kTwo, 2, 1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.exponent(), 0u);
  EXPECT_EQ(zero, PruferElement(kTwo));
}

TEST(PruferElement, Add) {
  EXPECT_TRUE((pr(kTwo, 1, 1) + pr(kTwo, 1, 1)).is_zero());
  EXPECT_EQ(pr(kTwo, 1, 2) + pr(kTwo, 1, 1), pr(kTwo, 3, 2));
  // 2/9 + 8/9 = 10/9 = 1/9 mod 1
  EXPECT_EQ(pr(kThree, 2, 2) + pr(kThree, 8, 2), pr(kThree, 1, 2));
}

TEST(PruferElement, MixedPrimesThrow) {
  EXPECT_THROW(pr(kTwo, 1, 1) + pr(kThree, 1, 1), config_error);
  EXPECT_THROW((void)(pr(kTwo, 1, 1) < pr(kThree, 1, 1)), config_error);
}

TEST(PruferElement, NegateAndScale) {
  EXPECT_EQ(-pr(kTwo, 1, 2), pr(kTwo, 3, 2));
  EXPECT_EQ(BigInt(3) * pr(kThree, 1, 2), pr(kThree, 1, 1));
  for (unsigned i = 0; i < 40; ++i) {
    EXPECT_EQ(BigInt(3) * PruferElement::unit(kThree, i + 1), PruferElement::unit(kThree, i));
  }
}

TEST(PruferElement, Order) {
  EXPECT_EQ(order(PruferElement(kTwo)), 1);
  EXPECT_EQ(order(PruferElement::unit(kThree, 7)), 2187);
  EXPECT_EQ(order(pr(kTwo, 3, 3)), 8);
  EXPECT_EQ(order(PruferElement::unit(kTwo, 64)), BigInt(1) << 64);
}

TEST(PruferElement, Mod1) {
  EXPECT_TRUE(mod1(PAdicFraction(kTwo, 1)).is_zero());
  EXPECT_EQ(mod1(PAdicFraction(kTwo, 3, 2)), pr(kTwo, 3, 2));
  EXPECT_EQ(mod1(-PAdicFraction(kThree, 1, 4)), pr(kThree, 80, 4));
}

TEST(PruferElement, TextForm) {
  EXPECT_EQ(PruferElement::parse("6/16", kTwo).to_string(), "3/8");
  EXPECT_EQ(PruferElement::parse(" -1/9 ", kThree).to_string(), "8/9");
  EXPECT_EQ(PruferElement::parse("7", kTwo).to_string(), "0");
  EXPECT_EQ(PruferElement::parse("0", kTwo).to_string(), "0");

  try {
    PruferElement::parse("1/6", kTwo);
    FAIL() << "expected parse_error";
  } catch (const parse_error& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(PruferElement::parse("1/", kTwo), parse_error);
  EXPECT_THROW(PruferElement::parse("1/2x", kTwo), parse_error);
  EXPECT_THROW(PruferElement::parse("", kTwo), parse_error);
}

TEST(PruferElement, OrderingIsByValueInUnitInterval) {
  EXPECT_LT(PruferElement(kTwo), pr(kTwo, 1, 3));
  EXPECT_LT(pr(kTwo, 1, 3), pr(kTwo, 1, 1));
  EXPECT_LT(pr(kTwo, 1, 1), pr(kTwo, 5, 3));
}

// Randomized axioms over several primes and sizes.
class PruferProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(PruferProperties, AbelianGroupAxioms) {
  const Prime p(GetParam());
  SplitMix64 rng(1000 + GetParam());
  const PruferElement zero(p);
  for (int n = 0; n < 500; ++n) {
    const auto a = random_prufer(rng, p, 6);
    const auto b = random_prufer(rng, p, 6);
    const auto c = random_prufer(rng, p, 6);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a + zero, a);
    EXPECT_TRUE((a + (-a)).is_zero());
  }
}

TEST_P(PruferProperties, OrderIsExactPowerOfP) {
  const Prime p(GetParam());
  SplitMix64 rng(2000 + GetParam());
  for (int n = 0; n < 200; ++n) {
    const auto a = random_prufer(rng, p, 5);
    const BigInt m = order(a);
    EXPECT_EQ(m, p.power(a.exponent()));
    EXPECT_TRUE((m * a).is_zero());
    // Brute force: no smaller positive multiple vanishes.
    if (m <= 3125) {
      for (BigInt k = 1; k < m; ++k) ASSERT_FALSE((k * a).is_zero());
    }
  }
}

TEST_P(PruferProperties, Mod1IsAHomomorphism) {
  const Prime p(GetParam());
  SplitMix64 rng(3000 + GetParam());
  for (int n = 0; n < 300; ++n) {
    const auto e1 = static_cast<unsigned>(rng.uniform(std::uint64_t{6}));
    const auto e2 = static_cast<unsigned>(rng.uniform(std::uint64_t{6}));
    const PAdicFraction x(p, BigInt(rng.uniform(std::uint64_t{2000})) - 1000, e1);
    const PAdicFraction y(p, BigInt(rng.uniform(std::uint64_t{2000})) - 1000, e2);
    EXPECT_EQ(mod1(x + y), mod1(x) + mod1(y));
  }
}

TEST_P(PruferProperties, CanonicalFormIsIdempotent) {
  const Prime p(GetParam());
  SplitMix64 rng(4000 + GetParam());
  for (int n = 0; n < 200; ++n) {
    const auto a = random_prufer(rng, p, 6);
    EXPECT_EQ(PruferElement(p, a.numerator(), a.exponent()), a);
    EXPECT_EQ(PruferElement::parse(a.to_string(), p), a);
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, PruferProperties, ::testing::Values(2u, 3u, 5u, 7u));

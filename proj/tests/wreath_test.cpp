#include "qcwreath/finite_oracle.hpp"
#include "qcwreath/random.hpp"
#include "qcwreath/wreath.hpp"

#include <gtest/gtest.h>

using namespace qcwreath;

namespace {

const Prime kTwo(2);

PruferElement pr(const Prime& p, long n, unsigned k) { return PruferElement(p, n, k); }

BaseFunction delta(const Prime& p, long bn, unsigned bk, long an, unsigned ak) {
  return BaseFunction::delta(pr(p, bn, bk), pr(p, an, ak));
}

// Order by repeated multiplication.
BigInt naive_order(const WreathElement& a, unsigned limit = 100000) {
  WreathElement power = a;
  for (unsigned n = 1; n <= limit; ++n) {
    if (power.is_identity()) return n;
    power = power * a;
  }
  return 0;
}

// (f, u^b)^m = (sum_{r<m} u^{rb} f, 1) materialized term by term.
BigInt materialized_order(const WreathElement& a) {
  const BigInt m = order(a.top());
  BaseFunction sum(a.prime());
  for (BigInt r = 0; r < m; ++r) sum = sum + translate(a.base(), r * a.top());
  return m * order(sum);
}

}  // namespace

TEST(Wreath, IdentityAndEquality) {
  const WreathElement e(kTwo);
  EXPECT_TRUE(e.is_identity());
  EXPECT_EQ(e, WreathElement(kTwo));
  EXPECT_TRUE(e.base().is_zero());
  EXPECT_NE(WreathElement::from_base(delta(kTwo, 0, 0, 1, 1)), e);
}

TEST(Wreath, ProductFormula) {
  SplitMix64 rng(3);
  const auto a = random_wreath(rng, kTwo, 4, 3);
  EXPECT_EQ(a * WreathElement(kTwo), a);

  const auto f = random_base(rng, kTwo, 4, 3);
  const auto b = pr(kTwo, 3, 3);
  EXPECT_EQ(WreathElement::from_top(b) * WreathElement::from_base(f),
            WreathElement(translate(f, b), b));

  // (d(0,1/2), u^{1/2})^2 = (d(0,1/2) + d(1/2,1/2), 1); in C_2 wr C_2 this is
  // ([1,0],1)^2 = ([1,1],0).
  const WreathElement x(delta(kTwo, 0, 0, 1, 1), pr(kTwo, 1, 1));
  const WreathElement expected(delta(kTwo, 0, 0, 1, 1) + delta(kTwo, 1, 1, 1, 1), PruferElement(kTwo));
  EXPECT_EQ(x * x, expected);
  const FiniteParams params(kTwo, 1, 1);
  const FiniteWreathElement fx(params, {1, 0}, 1);
  EXPECT_EQ(fx * fx, FiniteWreathElement(params, {1, 1}, 0));
  EXPECT_EQ(embed(fx * fx), expected);
}

TEST(Wreath, Inverse) {
  const WreathElement e(kTwo);
  EXPECT_EQ(inverse(e), e);
  const auto f = delta(kTwo, 1, 2, 3, 3);
  EXPECT_EQ(inverse(WreathElement::from_base(f)), WreathElement::from_base(-f));
  SplitMix64 rng(9);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_wreath(rng, Prime(3), 4, 3);
    EXPECT_EQ(inverse(inverse(a)), a);
  }
}

TEST(Wreath, Powers) {
  SplitMix64 rng(13);
  const auto a = random_wreath(rng, Prime(5), 4, 2);
  EXPECT_EQ(pow(a, 1), a);
  EXPECT_TRUE(pow(a, 0).is_identity());
  EXPECT_TRUE(pow(WreathElement::from_top(pr(Prime(5), 1, 1)), 5).is_identity());
  for (int n = 0; n < 50; ++n) {
    const auto x = random_wreath(rng, kTwo, 4, 3);
    WreathElement chain(kTwo);
    for (int r = 0; r < 7; ++r) chain = chain * x;
    EXPECT_EQ(pow(x, 7), chain);
    EXPECT_EQ(pow(x, -7), inverse(chain));
  }
}

TEST(Wreath, CommutatorConvention) {
  SplitMix64 rng(17);
  const auto a = random_wreath(rng, kTwo, 4, 3);
  EXPECT_TRUE(commutator(a, a).is_identity());

  const auto f = WreathElement::from_base(random_base(rng, kTwo, 4, 3));
  const auto g = WreathElement::from_base(random_base(rng, kTwo, 4, 3));
  EXPECT_TRUE(commutator(f, g).is_identity());

  // [(f,1),(0,u^c)] = (f (u^{-c} - 1), 1).
  const auto base = delta(kTwo, 0, 0, 1, 2);
  const auto c = pr(kTwo, 1, 1);
  const auto value = commutator(WreathElement::from_base(base), WreathElement::from_top(c));
  EXPECT_EQ(value, WreathElement::from_base(translate(base, -c) - base));
  EXPECT_EQ(value.base(), -translate(engel_expand(pr(kTwo, 1, 2), c, 1), -c));

  // The same commutator in C_4 wr C_2.
  const FiniteParams params(kTwo, 2, 1);
  const auto finite = commutator(FiniteWreathElement(params, {1, 0}, 0),
                                 FiniteWreathElement(params, {0, 0}, 1));
  EXPECT_EQ(embed(finite), value);

  EXPECT_EQ(conjugate(WreathElement::from_base(base), WreathElement::from_top(c)),
            WreathElement::from_base(translate(base, -c)));
}

TEST(Wreath, OrderExamples) {
  EXPECT_EQ(order(WreathElement(kTwo)), 1);
  EXPECT_EQ(order(WreathElement::from_top(pr(Prime(3), 1, 4))), 81);
  EXPECT_EQ(order(WreathElement(delta(kTwo, 0, 0, 1, 1), pr(kTwo, 1, 1))), 4);
  // Order 2^40 * 2^20 is found without iterating.
  const WreathElement huge(delta(kTwo, 1, 3, 1, 20), PruferElement::unit(kTwo, 40));
  EXPECT_EQ(order(huge), BigInt(1) << 60);
}

TEST(Wreath, OrderMatchesNaiveAndMaterializedFormulas) {
  for (unsigned p : {2u, 3u}) {
    const Prime prime(p);
    SplitMix64 rng(21 + p);
    for (int n = 0; n < 200; ++n) {
      const auto a = random_wreath(rng, prime, 4, 2);
      const BigInt structural = order(a);
      ASSERT_EQ(structural, naive_order(a)) << a.to_string();
      ASSERT_EQ(structural, materialized_order(a)) << a.to_string();
    }
  }
}

TEST(Wreath, MixedPrimesThrow) {
  EXPECT_THROW(WreathElement(kTwo) * WreathElement(Prime(3)), config_error);
  EXPECT_THROW(WreathElement(BaseFunction(kTwo), PruferElement(Prime(3))), config_error);
}

TEST(Wreath, TextForm) {
  SplitMix64 rng(31);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_wreath(rng, Prime(5), 4, 3);
    EXPECT_EQ(parse_wreath(a.to_string(), Prime(5)), a);
  }
  EXPECT_EQ(parse_wreath("(0; u^0)", kTwo), WreathElement(kTwo));
  EXPECT_EQ(parse_wreath("((1/2)*u^{0}; u^{1/4})", kTwo),
            WreathElement(delta(kTwo, 0, 0, 1, 1), pr(kTwo, 1, 2)));
  EXPECT_THROW(parse_wreath("(0, u^0)", kTwo), parse_error);
  EXPECT_THROW(parse_wreath("(0; u^0", kTwo), parse_error);
}

class WreathProperties : public ::testing::TestWithParam<unsigned> {};

TEST_P(WreathProperties, GroupAxioms) {
  const Prime p(GetParam());
  SplitMix64 rng(40 + GetParam());
  const WreathElement e(p);
  for (int n = 0; n < 300; ++n) {
    const auto a = random_wreath(rng, p, 4, 3);
    const auto b = random_wreath(rng, p, 4, 3);
    const auto c = random_wreath(rng, p, 4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * e, a);
    EXPECT_EQ(e * a, a);
    EXPECT_TRUE((a * inverse(a)).is_identity());
    EXPECT_TRUE((inverse(a) * a).is_identity());
  }
}

TEST_P(WreathProperties, Metabelian) {
  const Prime p(GetParam());
  SplitMix64 rng(50 + GetParam());
  for (int n = 0; n < 300; ++n) {
    const auto a = random_wreath(rng, p, 4, 3);
    const auto b = random_wreath(rng, p, 4, 3);
    const auto c = random_wreath(rng, p, 4, 3);
    const auto d = random_wreath(rng, p, 4, 3);
    EXPECT_TRUE(commutator(a, b).top().is_zero());
    EXPECT_TRUE(commutator(commutator(a, b), commutator(c, d)).is_identity());
  }
}

TEST_P(WreathProperties, CommutatorsArePTorsion) {
  const Prime p(GetParam());
  SplitMix64 rng(60 + GetParam());
  for (int n = 0; n < 300; ++n) {
    const auto c = commutator(random_wreath(rng, p, 4, 3), random_wreath(rng, p, 4, 3));
    BigInt m = order(c);
    EXPECT_TRUE(pow(c, m).is_identity());
    while (m % p.value() == 0) m /= p.value();
    EXPECT_EQ(m, 1);
  }
}

TEST_P(WreathProperties, CommutationWithTopIsLinearOnBase) {
  const Prime p(GetParam());
  SplitMix64 rng(70 + GetParam());
  for (int n = 0; n < 300; ++n) {
    const auto a1 = WreathElement::from_base(random_base(rng, p, 4, 3));
    const auto a2 = WreathElement::from_base(random_base(rng, p, 4, 3));
    const auto b = random_wreath(rng, p, 4, 3);
    EXPECT_EQ(commutator(a1 * a2, b), commutator(a1, b) * commutator(a2, b));
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, WreathProperties, ::testing::Values(2u, 3u, 5u));

#include <gtest/gtest.h>

#include "sofic/error.hpp"
#include "sofic/rational.hpp"
#include "sofic/rng.hpp"

using namespace sofic;

TEST(Rational, FractionStringIsLowestTerms) {
  EXPECT_EQ(to_fraction_string(make_rational(6, 8)), "3/4");
  EXPECT_EQ(to_fraction_string(make_rational(5)), "5/1");
  EXPECT_EQ(to_fraction_string(make_rational(-2, 4)), "-1/2");
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal_string(make_rational(1, 3), 4), "0.3333");
  EXPECT_EQ(to_decimal_string(make_rational(1, 2), 2), "0.50");
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3/9"), make_rational(1, 3));
  EXPECT_EQ(parse_rational("7"), make_rational(7));
  EXPECT_EQ(parse_rational("0.05"), make_rational(1, 20));
  EXPECT_EQ(parse_rational("-1.5"), make_rational(-3, 2));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
}

TEST(Rational, RoundTripThroughFractionString) {
  SplitMix64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto q = make_rational(static_cast<std::int64_t>(rng.below(1000)) - 500,
                                 static_cast<std::int64_t>(1 + rng.below(999)));
    EXPECT_EQ(parse_rational(to_fraction_string(q)), q);
  }
}

TEST(Rng, DeterministicAndForkIndependent) {
  SplitMix64 a(9), b(9);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  auto fa = a.fork(1), fb = b.fork(2);
  EXPECT_NE(fa.next(), fb.next());
}

TEST(Rng, PermutationAndSample) {
  SplitMix64 rng(3);
  auto p = rng.permutation(50);
  std::sort(p.begin(), p.end());
  for (std::uint32_t i = 0; i < 50; ++i) EXPECT_EQ(p[i], i);
  auto s = rng.sample(20, 7);
  EXPECT_EQ(s.size(), 7u);
  std::sort(s.begin(), s.end());
  EXPECT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.below(13), 13u);
}

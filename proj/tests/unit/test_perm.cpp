#include <gtest/gtest.h>

#include "sofic/error.hpp"
#include "sofic/rng.hpp"
#include "sofic/perm.hpp"
#include "sofic/repair.hpp"
#include "support/oracles.hpp"

using namespace sofic;

TEST(ErrPerm, RejectsNonInjective) {
  EXPECT_THROW(ErrPerm(std::vector<Point>{0, 0}), InputError);
  EXPECT_THROW(ErrPerm(std::vector<Point>{0, 5}), InputError);
}

TEST(ErrPerm, CompositionMatchesOracle) {
  SplitMix64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(40));
    const auto a = rng.permutation(n), b = rng.permutation(n);
    EXPECT_EQ(ErrPerm(a).after(ErrPerm(b)).images(), oracle::compose(a, b));
    EXPECT_EQ(ErrPerm(a).inverse().images(), oracle::inverse(a));
    EXPECT_EQ(commutator(ErrPerm(a), ErrPerm(b)).images(), oracle::commutator(a, b));
  }
}

TEST(ErrPerm, ErrorsPropagate) {
  const ErrPerm a(std::vector<Point>{1, kError, 0});
  const ErrPerm b(std::vector<Point>{1, 0, 2});
  const auto c = a.after(b);
  EXPECT_EQ(c(0), kError);
  EXPECT_EQ(c(1), 1u);
  EXPECT_FALSE(c.is_total());
}

TEST(ErrPerm, HammingMatchesOracleOnNestedDomains) {
  SplitMix64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto m = static_cast<std::uint32_t>(1 + rng.below(20));
    const auto big = static_cast<std::uint32_t>(m + rng.below(20));
    const auto a = rng.permutation(m), b = rng.permutation(big);
    EXPECT_EQ(hamming_distance_errors(ErrPerm(a), ErrPerm(b)), oracle::hamming(a, b));
    EXPECT_EQ(hamming_distance_errors(ErrPerm(b), ErrPerm(a)), oracle::hamming(a, b));
  }
}

TEST(ErrPerm, DistanceToIdentityCountsErrors) {
  const ErrPerm a(std::vector<Point>{0, kError, 2, 3});
  EXPECT_EQ(distance_to_identity(a, 4), make_rational(1, 4));
  EXPECT_EQ(distance_to_identity(ErrPerm::from_cycles(4, {{0, 1}}), 4), make_rational(1, 2));
}

TEST(ErrPerm, ConjugationAndPadding) {
  const auto s = ErrPerm::from_cycles(3, {{0, 1, 2}});
  const auto r = ErrPerm::from_cycles(3, {{0, 1}});
  const auto c = s.conjugated(r);
  EXPECT_EQ(c.images(), oracle::compose(oracle::compose(r.images(), s.images()), oracle::inverse(r.images())));
  EXPECT_EQ(s.extended_by_identity(5)(4), 4u);
  EXPECT_EQ(s.padded(5)(4), kError);
}

TEST(SignedPerm, LiftCommutesAndQuotients) {
  SplitMix64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(10));
    const ErrPerm base(rng.permutation(n));
    std::vector<bool> neg(n);
    for (std::uint32_t k = 0; k < n; ++k) neg[k] = rng.chance(1, 2);
    const auto s = SignedPerm::lift(base, neg);
    EXPECT_TRUE(s.commutes_with_sign_flip());
    EXPECT_TRUE(oracle::commutes_with_flip(s.perm().images()));
    EXPECT_EQ(s.quotient(), base);
  }
}

TEST(Repair, InvolutionIdentityExhaustiveSmall) {
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all_permutations(n)) {
      const auto t = fix_to_involution(ErrPerm(p));
      EXPECT_TRUE(oracle::is_involution(t.images()));
      EXPECT_EQ(oracle::hamming(p, t.images()), oracle::hamming(oracle::compose(p, p), oracle::identity(n)));
    }
}

TEST(Repair, FixedPointFreeOddSize) {
  const auto z = ErrPerm::from_cycles(5, {{0, 1}});
  const auto t = fix_fixed_point_free(z);
  EXPECT_EQ(t.universe(), 6u);
  EXPECT_EQ(t.fixed_point_count(), 0u);
  EXPECT_TRUE(t.is_involution());
  EXPECT_EQ(t(0), 1u);
  // Fixed points 2,3,4 pair as (2 3) and (4 5).
  EXPECT_EQ(t(2), 3u);
  EXPECT_EQ(t(4), 5u);
}

TEST(Repair, SignCommutationAgreesOnW) {
  SplitMix64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(6));
    const SignedPerm z{ErrPerm(rng.permutation(2 * n))};
    const auto r = commute_with_sign_flip(z);
    EXPECT_TRUE(oracle::commutes_with_flip(r.perm().images()));
    std::uint32_t w = 0;
    for (std::uint32_t s = 0; s < n; ++s)
      if (z(minus(s)) == flip_sign(z(plus(s)))) {
        ++w;
        EXPECT_EQ(r(plus(s)), z(plus(s)));
        EXPECT_EQ(r(minus(s)), z(minus(s)));
      }
    EXPECT_EQ(sign_commuting_fraction(z), oracle::frac(w, n));
    const auto flip = oracle::sign_flip(n);
    EXPECT_EQ(oracle::hamming(oracle::commutator(flip, z.perm().images()), oracle::identity(2 * n)),
              1 - sign_commuting_fraction(z));
  }
}

TEST(Repair, AddSignRelationsIsIdempotent) {
  Presentation p;
  p.add_generator("a");
  const auto tau = p.add_generator("tau");
  const auto first = add_sign_relations(p, tau);
  EXPECT_EQ(first.size(), 2u);
  EXPECT_TRUE(add_sign_relations(p, tau).empty());
}

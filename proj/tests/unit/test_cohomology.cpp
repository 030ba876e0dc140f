#include <gtest/gtest.h>

#include <set>

#include "sofic/cohomology.hpp"
#include "sofic/error.hpp"
#include "sofic/experiment.hpp"
#include "sofic/f2.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace sofic;

namespace {

// Brute-force cochains as sets of cells.
using CellSet = std::set<Cell>;

CellSet support(const SimplicialComplex& x, const F2Cochain& a) {
  CellSet s;
  for (std::size_t i = 0; i < x.size(a.k); ++i)
    if (a.bits.test(i)) s.insert(x.cell(a.k, i));
  return s;
}

CellSet brute_coboundary(const SimplicialComplex& x, int k, const CellSet& a) {
  CellSet out;
  for (const Cell& c : x.cells(k + 1)) {
    bool v = false;
    for (const auto& f : oracle::faces_of_size(c, static_cast<std::size_t>(k + 1))) v ^= a.count(f) != 0;
    if (v) out.insert(c);
  }
  return out;
}

Rational brute_norm(const SimplicialComplex& x, int k, const CellSet& a) {
  const auto w = oracle::weights(gen::top_faces(x), static_cast<std::size_t>(k));
  Rational s = 0;
  for (const auto& c : a) s += w.at(c);
  return s;
}

CellSet from_mask(const SimplicialComplex& x, int k, std::uint64_t mask) {
  CellSet s;
  for (std::size_t i = 0; i < x.size(k); ++i)
    if (mask >> i & 1u) s.insert(x.cell(k, i));
  return s;
}

CellSet sym_diff(const CellSet& a, const CellSet& b) {
  CellSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<CellSet> all_cochains(const SimplicialComplex& x, int k) {
  std::vector<CellSet> out;
  for (std::uint64_t m = 0; m < (1ull << x.size(k)); ++m) out.push_back(from_mask(x, k, m));
  return out;
}

}  // namespace

TEST(F2, RankNullspaceSolve) {
  f2::Bits a(4), b(4);
  a.set(0);
  a.set(1);
  b.set(1);
  b.set(2);
  const f2::Bits c = a ^ b;
  EXPECT_EQ(f2::rank({a, b, c}, 4), 2u);
  const auto ns = f2::nullspace({a, b}, 4);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) {
    EXPECT_EQ((a & v).count() % 2, 0u);
    EXPECT_EQ((b & v).count() % 2, 0u);
  }
  f2::Bits rhs(2);
  rhs.set(0);
  const auto x = f2::solve({a, b}, 4, rhs);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((a & *x).count() % 2, 1u);
  EXPECT_EQ((b & *x).count() % 2, 0u);
  f2::Bits all(3);
  all.set();
  EXPECT_FALSE(f2::solve({a, b, c}, 4, all).has_value());
}

TEST(Cohomology, CoboundaryMatchesBruteForce) {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = gen::random_connected(static_cast<std::uint32_t>(5 + rng.below(4)),
                                         static_cast<std::uint32_t>(rng.below(6)), 2, rng);
    for (int k = 0; k < 2; ++k)
      for (int i = 0; i < 20; ++i) {
        F2Cochain a = F2Cochain::zero(x, k);
        for (std::size_t j = 0; j < x.size(k); ++j)
          if (rng.chance(1, 2)) a.bits.set(j);
        const auto d = coboundary(x, a);
        EXPECT_EQ(support(x, d), brute_coboundary(x, k, support(x, a)));
        EXPECT_EQ(weighted_norm(x, a), brute_norm(x, k, support(x, a)));
        if (k == 0) EXPECT_TRUE(coboundary(x, d).is_zero());
      }
  }
}

TEST(Cohomology, DimsMatchBruteForceCounts) {
  for (const char* name : {"tetrahedron", "octahedron", "rp2"}) {
    const auto x = standard_complex(name);
    std::size_t cocycles = 0;
    std::set<CellSet> boundaries;
    for (const auto& a : all_cochains(x, 1)) cocycles += brute_coboundary(x, 1, a).empty();
    for (const auto& b : all_cochains(x, 0)) boundaries.insert(brute_coboundary(x, 0, b));
    const auto dims = cohomology_dims(x, 1);
    EXPECT_EQ(std::size_t{1} << dims.cocycles, cocycles) << name;
    EXPECT_EQ(std::size_t{1} << dims.coboundaries, boundaries.size()) << name;
  }
  EXPECT_EQ(cohomology_dims(standard_complex("rp2"), 2).cohomology(), 1u);
  EXPECT_EQ(cohomology_dims(standard_complex("torus"), 1).cohomology(), 2u);
  EXPECT_EQ(cohomology_dims(standard_complex("octahedron"), 1).cohomology(), 0u);
}

TEST(Cohomology, CosystoleMatchesBruteForce) {
  for (const char* name : {"rp2"}) {
    const auto x = standard_complex(name);
    std::set<CellSet> boundaries;
    for (const auto& b : all_cochains(x, 0)) boundaries.insert(brute_coboundary(x, 0, b));
    std::optional<Rational> best;
    for (const auto& a : all_cochains(x, 1)) {
      if (!brute_coboundary(x, 1, a).empty() || boundaries.count(a)) continue;
      const Rational n = brute_norm(x, 1, a);
      if (!best || n < *best) best = n;
    }
    const auto c = cosystole(x, 1);
    ASSERT_TRUE(c.value.has_value()) << name;
    EXPECT_EQ(*c.value, *best) << name;
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_TRUE(is_cocycle(x, *c.witness));
    EXPECT_EQ(weighted_norm(x, *c.witness), *best);
  }
  EXPECT_FALSE(cosystole(standard_complex("octahedron"), 1).value.has_value());
}

TEST(Cohomology, ExpansionMatchesBruteForce) {
  const auto x = standard_complex("tetrahedron");
  const auto all = all_cochains(x, 1);
  std::vector<CellSet> cocycles;
  for (const auto& a : all)
    if (brute_coboundary(x, 1, a).empty()) cocycles.push_back(a);
  std::optional<Rational> best;
  for (const auto& a : all) {
    const auto d = brute_coboundary(x, 1, a);
    if (d.empty()) continue;
    std::optional<Rational> dist;
    for (const auto& z : cocycles) {
      const Rational v = brute_norm(x, 1, sym_diff(a, z));
      if (!dist || v < *dist) dist = v;
    }
    const Rational r = brute_norm(x, 2, d) / *dist;
    if (!best || r < *best) best = r;
  }
  const auto e = cocycle_expansion_constant(x, 1);
  ASSERT_TRUE(e.value.has_value());
  EXPECT_EQ(*e.value, *best);
}

TEST(Cohomology, DistanceToSubspaceExactAndHeuristic) {
  const auto x = standard_complex("rp2");
  const auto b = coboundary_space(x, 1);
  SplitMix64 rng(4);
  for (int i = 0; i < 20; ++i) {
    F2Cochain a = F2Cochain::zero(x, 1);
    for (std::size_t j = 0; j < x.size(1); ++j)
      if (rng.chance(1, 3)) a.bits.set(j);
    const auto exact = distance_to_subspace(x, a, b, SearchMode::exact);
    const auto heur = distance_to_subspace(x, a, b, SearchMode::heuristic);
    EXPECT_TRUE(b.contains(exact.witness));
    EXPECT_EQ(weighted_distance(x, a, exact.witness), exact.value);
    EXPECT_GE(heur.value, exact.value);
    Rational brute = 1;
    for (const auto& v : all_cochains(x, 0)) brute = std::min(brute, Rational(brute_norm(x, 1, sym_diff(support(x, a), brute_coboundary(x, 0, v)))));
    EXPECT_EQ(exact.value, brute);
  }
}

TEST(Cohomology, SolveCoboundary) {
  const auto x = standard_complex("octahedron");
  F2Cochain beta = F2Cochain::indicator(x, x.cell(1, 3));
  const auto target = coboundary(x, beta);
  const auto sol = solve_coboundary(x, target);
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ(coboundary(x, *sol), target);
  const auto rp2 = standard_complex("rp2");
  EXPECT_FALSE(solve_coboundary(rp2, F2Cochain::indicator(rp2, rp2.cell(2, 0))).has_value());
}

TEST(Cohomology, SizeLimitsEnforced) {
  const auto x = random_lm_complex(9, 0.5, 3);
  EXPECT_THROW(cocycle_expansion_constant(x, 1), SizeLimitError);
}

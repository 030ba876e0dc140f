#include <gtest/gtest.h>

#include <memory>

#include "sofic/error.hpp"
#include "sofic/experiment.hpp"
#include "sofic/rng.hpp"
#include "sofic/sym_cochain.hpp"
#include "sofic/sym_correction.hpp"
#include "support/oracles.hpp"

using namespace sofic;

namespace {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

ComplexPtr shared(SimplicialComplex x) { return std::make_shared<const SimplicialComplex>(std::move(x)); }

/// Edge {0,1} with apexes 2..k+1.
ComplexPtr book(std::uint32_t k) {
  std::vector<Cell> tops;
  for (Vertex w = 2; w < k + 2; ++w) tops.push_back({0, 1, w});
  return shared(SimplicialComplex::from_top_faces(tops));
}

VertexPerms random_h(const SimplicialComplex& x, std::uint32_t n, SplitMix64& rng) {
  VertexPerms h(x.vertex_bound(), ErrPerm::identity(n));
  for (const Cell& v : x.cells(0)) h[v[0]] = ErrPerm(rng.permutation(n));
  return h;
}

/// j violates triangle uvw when some rotation of the boundary is defined at
/// j and does not return it.
bool brute_violates(const SymCochain& f, const Cell& t, Point j) {
  const std::vector<std::vector<Vertex>> loops{{t[0], t[1], t[2], t[0]}, {t[1], t[2], t[0], t[1]},
                                               {t[2], t[0], t[1], t[2]}, {t[0], t[2], t[1], t[0]},
                                               {t[2], t[1], t[0], t[2]}, {t[1], t[0], t[2], t[1]}};
  for (const auto& loop : loops) {
    Point p = j;
    for (std::size_t i = 0; i + 1 < loop.size() && p != kError; ++i) p = f.edge(loop[i], loop[i + 1])(p);
    if (p != kError && p != j) return true;
  }
  return false;
}

}  // namespace

TEST(SymCochain, CoboundaryIsFlatAndShiftInverts) {
  const auto x = shared(standard_complex("octahedron"));
  SplitMix64 rng(1);
  const auto h = random_h(*x, 5, rng);
  const auto f = sym_coboundary(x, h);
  for (const Cell& e : x->cells(1)) {
    EXPECT_EQ(f.edge(e[0], e[1]), h[e[1]].after(h[e[0]].inverse()));
    EXPECT_EQ(f.edge(e[1], e[0]), f.edge(e[0], e[1]).inverse());
  }
  EXPECT_EQ(sym_delta_weight(f).plain, 0);
  EXPECT_EQ(sym_delta_weight(f, Strictness::strict).robust, 0);
  EXPECT_EQ(sym_weight(coboundary_shift(f, h)), 0);
  const SymCochain id(x, 1, 5);
  EXPECT_EQ(sym_distance(f, id), sym_weight(f));
}

TEST(SymCochain, RemoveIndexDropsDomainAndImage) {
  const auto x = book(1);
  SymCochain f(x, 1, 3);
  f.set_edge(0, 1, ErrPerm::from_cycles(3, {{0, 1, 2}}));
  f.remove_index(1);
  EXPECT_EQ(f.edge(0, 1)(1), kError);
  EXPECT_EQ(f.edge(0, 1)(0), kError);  // 0 -> 1 lost its image
  EXPECT_EQ(f.edge(0, 1)(2), 0u);
}

TEST(SymCorrection, DeletionMatchesBruteForce) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = shared(standard_complex(trial % 2 ? "rp2" : "torus"));
    const auto n = static_cast<std::uint32_t>(2 + rng.below(6));
    auto f = sym_coboundary(x, random_h(*x, n, rng));
    for (std::size_t e = 0; e < x->size(1); ++e)
      if (rng.chance(1, 4)) f.set(e, ErrPerm(rng.permutation(n)));
    std::size_t violated = 0;
    for (const Cell& t : x->cells(2))
      for (Point j = 0; j < n; ++j) {
        const bool v = brute_violates(f, t, j);
        EXPECT_EQ(v, triangle_violates(f, t, j));
        violated += v;
      }
    const auto r = global_deletion(f);
    EXPECT_EQ(r.violated_pairs, violated);
    EXPECT_EQ(r.total_pairs, n * x->size(2));
    EXPECT_EQ(r.remaining_violations, 0u);
    EXPECT_TRUE(r.markov_bound_holds());
    for (const Cell& t : x->cells(2))
      for (Point j = 0; j < n; ++j) EXPECT_FALSE(brute_violates(r.f, t, j));
  }
}

TEST(SymCorrection, EdgeViolationsCountsLink) {
  const auto x = book(3);
  SymCochain f(x, 1, 2);
  f.set_edge(0, 1, ErrPerm::from_cycles(2, {{0, 1}}));
  // Every apex w and both indices see f(w0)f(1w)f(01) = swap.
  EXPECT_EQ(edge_violations(f, 0, 1), 6u);
}

TEST(SymCorrection, SingleEdgeCorrectionRestoresMajority) {
  const auto x = book(5);
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = random_h(*x, 6, rng);
    const auto good = sym_coboundary(x, h);
    auto bad = good;
    bad.set_edge(0, 1, ErrPerm(rng.permutation(6)));
    const auto r = single_edge_correction(bad, 0, 1, make_rational(2, 3));
    EXPECT_EQ(r.f.edge(0, 1), good.edge(0, 1));
    for (const Cell& e : x->cells(1))
      if (e != Cell{0, 1}) EXPECT_EQ(r.f.edge(e[0], e[1]), bad.edge(e[0], e[1]));
  }
}

TEST(SymCorrection, SingleEdgeCorrectionDeletesWithoutMajority) {
  const auto x = book(2);
  SymCochain f(x, 1, 2);
  // Apex 2 votes identity, apex 3 votes swap: no value reaches 2/3, none is
  // below 1/3, so index stays; with eta1 = 1/2 both values tie at the
  // threshold and the collision deletes.
  f.set_edge(1, 3, ErrPerm::from_cycles(2, {{0, 1}}));
  const auto r = single_edge_correction(f, 0, 1, make_rational(2, 3));
  for (Point i = 0; i < 2; ++i) EXPECT_EQ(r.actions[i], IndexAction::unchanged);
}

TEST(SymCorrection, VertexCorrectionOnFlatCochainChangesNothing) {
  const auto x = shared(standard_complex("octahedron"));
  SplitMix64 rng(4);
  const auto f = sym_coboundary(x, random_h(*x, 3, rng));
  const auto r = vertex_link_correction(f, 0, make_rational(1, 10), make_rational(1, 10));
  EXPECT_EQ(r.link_distance, 0);
  EXPECT_TRUE(r.deleted.empty());
  EXPECT_EQ(sym_delta_weight(r.f).plain, 0);
  for (Point i = 0; i < 3; ++i) EXPECT_EQ(vertex_violation_mass(f, 0, i), 0);
}

TEST(SymMinimality, CoboundaryViolatesOnlyAboveOne) {
  const std::vector<Cell> tops{{0, 1, 2}};
  const auto x = shared(SimplicialComplex::from_top_faces(tops));
  SplitMix64 rng(5);
  VertexPerms h(3, ErrPerm::identity(2));
  h[1] = ErrPerm::from_cycles(2, {{0, 1}});
  const auto f = sym_coboundary(x, h);
  ASSERT_GT(sym_weight(f), 0);
  const auto strong = eta_minimality_check(f, 2);
  EXPECT_TRUE(strong.exhaustive);
  EXPECT_TRUE(strong.violation_found);
  ASSERT_TRUE(strong.witness.has_value());
  const auto shifted = coboundary_shift(f, *strong.witness);
  EXPECT_GT(2 * (sym_weight(f) - sym_weight(shifted)), sym_distance(f, shifted));
  const auto weak = eta_minimality_check(f, 1);
  EXPECT_FALSE(weak.violation_found);
  EXPECT_EQ(weak.evaluated, 8u);
}

TEST(SymMinimality, LocalizationAtVertexIsLinkCochain) {
  const auto x = shared(standard_complex("octahedron"));
  SplitMix64 rng(6);
  const auto f = sym_coboundary(x, random_h(*x, 2, rng));
  SymCochain g(x, 2, 2);
  const auto local = localize(g, Cell{0});
  EXPECT_EQ(local.degree(), 1);
  EXPECT_EQ(local.complex(), link(*x, Cell{0}));
  EXPECT_THROW(localize(f, Cell{0, 1}), InputError);
}

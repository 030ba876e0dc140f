#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "criteria.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"
#include "sofic/action.hpp"
#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/covering.hpp"
#include "sofic/cycles.hpp"
#include "sofic/experiment.hpp"
#include "sofic/extension.hpp"
#include "sofic/perm.hpp"
#include "sofic/repair.hpp"
#include "sofic/sampler.hpp"
#include "sofic/sym_cochain.hpp"
#include "sofic/sym_correction.hpp"

using namespace sofic;
using oracle::frac;
using oracle::Vec;

namespace acceptance {


// ---- 1: involution repair is exact -----------------------------------------

Outcome involution_identity() {
  Outcome out;
  std::size_t checked = 0;
  auto check = [&](const Vec& z) {
    const ErrPerm tau = fix_to_involution(ErrPerm(z));
    const Vec t = vec_of(tau);
    ++checked;
    if (!oracle::is_involution(t)) out.fail("output is not an involution");
    const auto lhs = oracle::hamming(z, t);
    const auto rhs = oracle::hamming(oracle::compose(z, z), oracle::identity(static_cast<std::uint32_t>(z.size())));
    if (lhs != rhs) out.fail("d(zeta,tau) = " + q(lhs) + " but d(zeta^2,Id) = " + q(rhs));
    if (hamming_distance_errors(ErrPerm(z), tau) != lhs) out.fail("library distance disagrees with oracle");
  };
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const Vec& z : oracle::all_permutations(n)) check(z);
  SplitMix64 rng(2024);
  for (int i = 0; i < 10000; ++i) check(rng.permutation(100));
  out.detail = out.pass ? std::to_string(checked) + " permutations, equality exact" : out.detail;
  return out;
}

// ---- 2: fixed-point-free repair --------------------------------------------

Outcome fixed_point_free_bound() {
  Outcome out;
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 8; ++n)
    for (const Vec& z : oracle::all_permutations(n)) {
      if (!oracle::is_involution(z)) continue;
      ++checked;
      const Vec t = vec_of(fix_fixed_point_free(ErrPerm(z)));
      if (t.size() != 2 * ((n + 1) / 2)) out.fail("wrong output size for n = " + std::to_string(n));
      if (!oracle::is_involution(t) || oracle::fixed_points(t) != 0) out.fail("output has fixed points");
      const auto eps = frac(oracle::fixed_points(z), n);
      if (oracle::hamming(z, t) > 2 * eps) out.fail("distance exceeds 2 eps for n = " + std::to_string(n));
    }
  if (out.pass) out.detail = std::to_string(checked) + " involutions";
  return out;
}

// ---- 3: sign commutation ---------------------------------------------------

Outcome sign_commutation() {
  Outcome out;
  std::size_t checked = 0;
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const Vec flip = oracle::sign_flip(n);
    for (const Vec& z : oracle::all_permutations(2 * n)) {
      ++checked;
      const Vec s = vec_of(commute_with_sign_flip(SignedPerm(ErrPerm(z))).perm());
      if (!oracle::commutes_with_flip(s)) out.fail("output does not commute with -Id");
      const auto bound = oracle::hamming(oracle::commutator(flip, z), oracle::identity(2 * n));
      if (oracle::hamming(s, z) > bound) out.fail("distance exceeds the commutator defect");
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " signed permutations";
  return out;
}

// ---- 4: perturbation bound -------------------------------------------------

Outcome perturbation_bound() {
  Outcome out;
  SplitMix64 rng(41);
  std::size_t tight = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto gens = static_cast<std::uint32_t>(1 + rng.below(3));
    const auto m = static_cast<std::uint32_t>(1 + rng.below(150));
    const auto big = static_cast<std::uint32_t>(m + rng.below(rng.chance(1, 2) ? 1 + m / 8 : 201 - m));
    // φ: powers of one cycle on [0,m) half the time, random otherwise.
    const bool abelian = rng.chance(1, 2);
    Presentation p;
    for (std::uint32_t g = 0; g < gens; ++g) p.add_generator(std::string(1, static_cast<char>('a' + g)));
    std::vector<oracle::Word> rels;
    const auto nrel = 1 + rng.below(3);
    for (std::uint64_t r = 0; r < nrel; ++r) {
      oracle::Word w;
      if (gens >= 2 && rng.chance(abelian ? 3 : 1, 4)) {
        w = {{0, false}, {1, false}, {0, true}, {1, true}};
      } else {
        const auto len = 1 + rng.below(4);
        for (std::uint64_t i = 0; i < len; ++i) w.push_back({static_cast<std::uint32_t>(rng.below(gens)), rng.chance(1, 2)});
      }
      Word lw;
      for (auto [g, inv] : w) lw.push_back(Letter{g, inv});
      p.add_relation(lw);
      rels.push_back(w);
    }
    std::vector<Vec> phi(gens), psi(gens);
    const Vec cyc = [&] {
      Vec c(m);
      for (std::uint32_t i = 0; i < m; ++i) c[i] = (i + 1) % m;
      return c;
    }();
    for (std::uint32_t g = 0; g < gens; ++g) {
      if (abelian) {
        Vec v = oracle::identity(m);
        for (auto k = rng.below(m); k > 0; --k) v = oracle::compose(cyc, v);
        phi[g] = v;
      } else {
        phi[g] = rng.permutation(m);
      }
      Vec s = oracle::identity(big);
      std::copy(phi[g].begin(), phi[g].end(), s.begin());
      const auto swaps = rng.below(1 + big / (rng.chance(1, 2) ? 10 : 50));
      for (std::uint64_t i = 0; i < swaps; ++i) std::swap(s[rng.below(big)], s[rng.below(big)]);
      psi[g] = s;
    }
    std::vector<ErrPerm> pi, si;
    for (std::uint32_t g = 0; g < gens; ++g) {
      pi.emplace_back(phi[g]);
      si.emplace_back(psi[g]);
    }
    const AlmostAction a(p, pi, m), b(p, si, big);
    const auto ell = static_cast<long>(p.max_relation_length());
    const Rational def_phi = oracle::defect(phi, m, rels);
    const Rational def_psi = oracle::defect(psi, big, rels);
    Rational dist = 0;
    for (std::uint32_t g = 0; g < gens; ++g) dist = std::max(dist, Rational(oracle::hamming(phi[g], psi[g])));
    if (defect(a) != def_phi || defect(b) != def_psi || action_distance(a, b) != dist)
      out.fail("library and oracle disagree in trial " + std::to_string(trial));
    const Rational bound = def_phi + (ell + 1) * dist;
    if (def_psi > bound) out.fail("def(psi) = " + q(def_psi) + " > " + q(bound) + " in trial " + std::to_string(trial));
    tight += bound < 1;
  }
  if (out.pass) out.detail = "1000 trials, " + std::to_string(tight) + " with bound below 1";
  return out;
}

// ---- 5: normalization pipeline ---------------------------------------------

Outcome normalization_pipeline() {
  Outcome out;
  const auto& names = standard_complex_names();
  const std::vector<Rational> rates{0, make_rational(1, 100), make_rational(1, 20), make_rational(1, 10),
                                    make_rational(1, 5)};
  std::size_t padded = 0;
  for (int run = 0; run < 100; ++run) {
    SplitMix64 rng(1000 + static_cast<std::uint64_t>(run));
    const auto x = standard_complex(names[run % names.size()]);
    const auto t = spanning_tree(x, 0);
    const auto phi = default_cocycle(x);
    const auto fiber = static_cast<std::uint32_t>(2 + rng.below(7));
    SignedLift lift;
    for (unsigned d = 0; d < kMaxGaugeDraws; ++d) {
      lift = lift_to_extension(x, t, phi, random_gauge_action(x, t, fiber, rng));
      if (lift.exact) break;
    }
    const AlmostAction noisy = inject_noise(lift.psi, rates[run % rates.size()], rng);
    const Normalization n = normalize_sofic_approx(noisy, "tau");
    const auto& r = n.report;
    const std::uint32_t u = n.action.universe();
    padded += u != noisy.universe();

    // Oracle recomputation of ε, ε', ℓ and the output defect.
    const Presentation& pin = noisy.presentation();
    std::vector<Vec> gin, gout;
    for (const auto& im : noisy.images()) gin.push_back(vec_of(im));
    for (const auto& im : n.action.images()) gout.push_back(vec_of(im));
    auto words = [](const Presentation& p) {
      std::vector<oracle::Word> ws;
      for (const auto& w : p.relations()) {
        oracle::Word o;
        for (const auto& l : w) o.push_back({l.generator, l.inverse});
        ws.push_back(o);
      }
      return ws;
    };
    const long ell = static_cast<long>(n.action.presentation().max_relation_length());
    const Rational eps = oracle::defect(gin, noisy.universe(), words(pin));
    const std::uint32_t tau_in = pin.require("tau");
    const Rational eps_prime = frac(oracle::fixed_points(gin[tau_in]), noisy.universe());
    const Rational def_out = oracle::defect(gout, u, words(n.action.presentation()));
    const std::string tag = " in run " + std::to_string(run);

    if (gout[n.action.presentation().require("tau")] != oracle::sign_flip(u / 2)) out.fail("tau is not -Id" + tag);
    for (const auto& g : gout)
      if (!oracle::commutes_with_flip(g)) out.fail("an image does not commute with -Id" + tag);
    if (eps != r.epsilon || eps_prime != r.epsilon_prime || def_out != r.defect_out)
      out.fail("stage report disagrees with oracle" + tag);
    const Rational chained = (2 * ell + 2) * eps_prime + (3 * ell + 4) * eps + (ell + 1) * r.d3;
    if (def_out > chained) out.fail("defect " + q(def_out) + " exceeds chained bound " + q(chained) + tag);
    if (!r.within_bounds()) out.fail("a stage bound fails" + tag);
  }
  if (out.pass) out.detail = "100 runs, " + std::to_string(padded) + " padded";
  return out;
}

// ---- 6: cohomology core ----------------------------------------------------

namespace {

F2Cochain oracle_coboundary(const SimplicialComplex& x, const F2Cochain& a) {
  F2Cochain d = F2Cochain::zero(x, a.k + 1);
  for (std::size_t i = 0; i < x.size(a.k + 1); ++i) {
    bool bit = false;
    for (const auto& f : oracle::faces_of_size(x.cell(a.k + 1, i), static_cast<std::size_t>(a.k) + 1))
      bit ^= a.bits.test(*x.index_of(f));
    if (bit) d.bits.set(i);
  }
  return d;
}

}  // namespace

Outcome cohomology_core() {
  Outcome out;
  SplitMix64 rng(7);
  std::size_t cochains = 0;
  for (int c = 0; c < 20; ++c) {
    const int dim = c % 2 == 0 ? 2 : 3;
    const auto n = static_cast<std::uint32_t>(5 + rng.below(5));
    const auto x = gen::random_connected(n, static_cast<std::uint32_t>(rng.below(12)), dim, rng);
    for (int k = 0; k <= x.dim(); ++k) {
      Rational sum = 0;
      const auto ow = oracle::weights(gen::top_faces(x), static_cast<std::size_t>(k));
      for (std::size_t i = 0; i < x.size(k); ++i) {
        const Rational w = face_weight(x, k, i);
        if (w != ow.at(x.cell(k, i))) out.fail("face weight disagrees with oracle");
        sum += w;
      }
      if (sum != 1) out.fail("weights of X(" + std::to_string(k) + ") sum to " + q(sum));
    }
    for (int s = 0; s < 50; ++s) {
      const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(x.dim() - 1)));
      F2Cochain a = F2Cochain::zero(x, k);
      for (std::size_t i = 0; i < x.size(k); ++i)
        if (rng.chance(1, 2)) a.bits.set(i);
      const F2Cochain d = coboundary(x, a);
      if (d != oracle_coboundary(x, a)) out.fail("coboundary disagrees with oracle");
      if (!coboundary(x, d).is_zero()) out.fail("delta delta is not zero");
      ++cochains;
    }
  }

  const auto tet = standard_complex("tetrahedron");
  if (cohomology_dims(tet, 2).cohomology() != 1) out.fail("dim H^2 of the tetrahedron boundary is not 1");
  // Brute force: every 2-cochain is a cocycle; B^2 = δ of the 64 1-cochains.
  std::vector<F2Cochain> b2;
  for (std::uint32_t m = 0; m < 64; ++m) {
    F2Cochain a = F2Cochain::zero(tet, 1);
    for (std::size_t i = 0; i < 6; ++i)
      if (m & (1u << i)) a.bits.set(i);
    b2.push_back(oracle_coboundary(tet, a));
  }
  std::optional<Rational> brute;
  for (std::uint32_t m = 0; m < 16; ++m) {
    F2Cochain a = F2Cochain::zero(tet, 2);
    for (std::size_t i = 0; i < 4; ++i)
      if (m & (1u << i)) a.bits.set(i);
    if (std::find(b2.begin(), b2.end(), a) != b2.end()) continue;
    Rational best = 1;
    for (const auto& b : b2) best = std::min(best, frac((a + b).support_size(), 4));
    brute = brute ? std::min(*brute, best) : best;
  }
  const auto cs = cosystole(tet, 2);
  if (!brute || *brute != make_rational(1, 4) || !cs.value || *cs.value != *brute)
    out.fail("cosystole of the tetrahedron boundary is not 1/4");

  const std::vector<Cell> one{{0, 1, 2}};
  const auto tri = SimplicialComplex::from_top_faces(one);
  std::optional<Rational> ratio;
  for (std::uint32_t m = 0; m < 8; ++m) {
    if (m == 0 || m == 7) continue;  // the two constant cochains are the cocycles
    F2Cochain a = F2Cochain::zero(tri, 0);
    for (std::size_t i = 0; i < 3; ++i)
      if (m & (1u << i)) a.bits.set(i);
    const Rational norm = frac(oracle_coboundary(tri, a).support_size(), 3);
    const Rational dist = frac(std::min(a.support_size(), 3 - a.support_size()), 3);
    const Rational r = norm / dist;
    ratio = ratio ? std::min(*ratio, r) : r;
  }
  const auto e = cocycle_expansion_constant(tri, 0);
  if (!ratio || *ratio != 2 || !e.value || *e.value != 2) out.fail("expansion of the triangle at k=0 is not 2");
  if (out.pass) out.detail = std::to_string(cochains) + " cochains, H^2 = 1, cosystole 1/4, expansion 2";
  return out;
}

}  // namespace acceptance

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/covering.hpp"
#include "sofic/rational.hpp"
#include "sofic/rng.hpp"

namespace sofic {

/// A central Z/2-extension of π₁(X), represented by the 2-cocycle of its
/// class rather than by a group.
struct ExtensionDatum {
  Presentation base;      ///< fundamental_group_presentation(X, T)
  Presentation extended;  ///< extension_from_cocycle(X, T, cocycle)
  F2Cochain cocycle;
};

/// Generators: the edge generators of X plus "tau". Relations, in order:
/// τ², τ s τ⁻¹ s⁻¹ for every edge generator s, the tree relations, the
/// backtracking relations, and both triangle orientations each followed by
/// τ when φ(xyz) = 1. Throws InputError unless φ is a 2-cocycle.
Presentation extension_from_cocycle(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi);

ExtensionDatum make_extension(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi);

/// φ + δψ₁: the cocycle of the same extension after changing the section.
F2Cochain adjust_section(const SimplicialComplex& x, const F2Cochain& phi, const F2Cochain& psi1);

/// A genuine action f(xy) = π^{c(xy)} of π₁(X) on [0, fiber): c is a
/// uniformly random 1-cocycle normalized to vanish on the tree, π a random
/// involution with at most one fixed point.
AlmostAction random_gauge_action(const SimplicialComplex& x, const RootedTree& t, std::uint32_t fiber,
                                 SplitMix64& rng);

struct SignedLift {
  AlmostAction psi;  ///< action of the extension presentation on Σ±
  bool exact = false;  ///< every component lifted
  std::size_t components = 0;
  std::size_t exact_components = 0;
};

/// ψ(x̃y).±⋄ = ±(-1)^{c(e)} f(xy).⋄ and τ ↦ -Id, where e is the Y-edge
/// over xy ending at (y,⋄) and c solves δc = φ∘𝒫 on each component of the
/// cover, normalized to vanish on the lifts of the tree. On components
/// where φ∘𝒫 is not a coboundary c = 0.
SignedLift lift_to_extension(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi,
                             const AlmostAction& f);

/// Restricts a sign-commuting action on Σ± to Ω± with Ω = [0, omega):
/// points whose image leaves Ω are re-matched to the unused targets in
/// increasing order. "tau" stays -Id.
AlmostAction truncate_signed_action(const AlmostAction& psi, std::uint32_t omega);

/// Replaces every image σ (other than the skipped generators) by π∘σ for a
/// uniformly random permutation π of ⌊rate·|Σ|⌋ random points.
AlmostAction inject_noise(const AlmostAction& phi, const Rational& rate, SplitMix64& rng,
                          const std::vector<std::string>& skip = {});

}  // namespace sofic

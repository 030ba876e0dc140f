#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// τ = ζ on Fix(ζ²) and the identity elsewhere, so τ² = Id and
/// d_H(ζ, τ) = d_H(ζ², Id). ζ must be total.
ErrPerm fix_to_involution(const ErrPerm& zeta);

/// Fixed-point-free involution on [0, 2⌈n/2⌉) that agrees with the
/// involution ζ off Fix(ζ). Fixed points are paired consecutively in index
/// order; an odd leftover is paired with the new point n.
ErrPerm fix_fixed_point_free(const ErrPerm& zeta);

/// A permutation of Ω± commuting with -Id that agrees with ζ on ±W, where
/// W = {⋆ : ζ.-⋆ = -(ζ.+⋆)}. Sources outside W are sent to unused targets
/// in increasing order.
SignedPerm commute_with_sign_flip(const SignedPerm& zeta);

/// |W| / |Ω| for the set W above; d_H([-Id, ζ], Id) = 1 - that fraction.
Rational sign_commuting_fraction(const SignedPerm& zeta);

/// Measured quantities of the three-stage normalization.
struct NormalizationReport {
  std::size_t ell = 0;          ///< maximal relation length
  Rational epsilon;             ///< def(ψ)
  Rational epsilon_prime;       ///< 1 - d_H(ψ(τ), Id), the fixed-point fraction
  Rational d1;                  ///< d_H(ψ, f)
  Rational d2;                  ///< d_H(f, g), measured before relabeling
  Rational d3;                  ///< d_H(g, h) in the relabeled frame
  Rational defect_f;
  Rational defect_g;
  Rational defect_out;
  std::uint32_t input_universe = 0;
  std::uint32_t output_universe = 0;
  std::vector<std::string> added_relations;

  /// (ℓ+2)ε
  Rational stage1_bound() const;
  /// 2(ε' + ε)
  Rational stage2_distance_bound() const;
  /// (2ℓ+2)ε' + (3ℓ+4)ε
  Rational stage2_defect_bound() const;
  /// stage2_defect_bound + (ℓ+1)·d3
  Rational final_bound() const;
  bool within_bounds() const;
};

struct Normalization {
  AlmostAction action;
  NormalizationReport report;
  /// After stage 2, point p of the padded set is renamed relabel(p) so that
  /// τ becomes -Id in the ±-encoding.
  ErrPerm relabel;
};

/// Adds τ² and [τ,s] = τ s τ⁻¹ s⁻¹ for every s ≠ τ when absent.
/// Returns the formatted relations that were added.
std::vector<std::string> add_sign_relations(Presentation& p, std::uint32_t tau);

/// Runs the three repair stages on an action of a presentation containing
/// the generator `tau_name`. Images must be total on Σ. Stage 3 treats the
/// generators independently and uses up to `threads` workers.
Normalization normalize_sofic_approx(const AlmostAction& psi, const std::string& tau_name = "tau",
                                     unsigned threads = 1);

}  // namespace sofic

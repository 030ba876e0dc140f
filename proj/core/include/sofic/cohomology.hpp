#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sofic/complex.hpp"
#include "sofic/f2.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// A k-cochain with F2 coefficients: one bit per k-cell, in the complex's
/// canonical cell order. Addition is XOR.
struct F2Cochain {
  int k = 0;
  f2::Bits bits;

  F2Cochain() = default;
  F2Cochain(int dim, f2::Bits b) : k(dim), bits(std::move(b)) {}

  static F2Cochain zero(const SimplicialComplex& x, int k);
  static F2Cochain ones(const SimplicialComplex& x, int k);
  static F2Cochain indicator(const SimplicialComplex& x, const Cell& cell);

  bool is_zero() const { return bits.none(); }
  std::size_t support_size() const { return bits.count(); }

  F2Cochain& operator+=(const F2Cochain& o);
  friend F2Cochain operator+(F2Cochain a, const F2Cochain& b) { return a += b; }
  friend bool operator==(const F2Cochain& a, const F2Cochain& b) {
    return a.k == b.k && a.bits == b.bits;
  }
};

/// (δα)(σ) = Σ_{τ ⊂ σ, τ ∈ X(k)} α(τ). Requires k < dim X.
F2Cochain coboundary(const SimplicialComplex& x, const F2Cochain& alpha);

/// ‖α‖ = Σ_{σ: α(σ)=1} w(σ).
Rational weighted_norm(const SimplicialComplex& x, const F2Cochain& alpha);

/// d_w(α, β) = ‖α + β‖.
Rational weighted_distance(const SimplicialComplex& x, const F2Cochain& a, const F2Cochain& b);

/// Subspace of C^k held as a reduced row-echelon basis.
struct F2Subspace {
  int k = 0;
  f2::Echelon basis;

  std::size_t dim() const { return basis.rank(); }
  std::size_t ambient_dim() const { return basis.width; }
  bool contains(const F2Cochain& a) const { return a.k == k && basis.contains(a.bits); }
  std::vector<F2Cochain> vectors() const;
};

/// Z^k = ker δ_k. For k = dim X every cochain is a cocycle.
F2Subspace cocycle_space(const SimplicialComplex& x, int k);

/// B^k = im δ_{k-1}; B^0 = {0}.
F2Subspace coboundary_space(const SimplicialComplex& x, int k);

struct CohomologyDims {
  std::size_t cochains = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology() const { return cocycles - coboundaries; }
};
CohomologyDims cohomology_dims(const SimplicialComplex& x, int k);

/// Largest subspace dimension enumerated by the exact routines.
inline constexpr std::size_t kExhaustiveDimLimit = 24;

enum class SearchMode { exact, heuristic };

struct SubspaceDistance {
  Rational value;
  /// Closest element of the subspace found; ties go to the lexicographically
  /// smallest bit pattern in exact mode.
  F2Cochain witness;
  bool exact = false;
};

/// d_w(α, V). Exact mode enumerates all 2^{dim V} elements and throws
/// SizeLimitError above kExhaustiveDimLimit. Heuristic mode runs a
/// deterministic greedy descent over basis vectors and returns an upper
/// bound.
SubspaceDistance distance_to_subspace(const SimplicialComplex& x, const F2Cochain& alpha,
                                      const F2Subspace& v, SearchMode mode = SearchMode::exact);

struct ExpansionConstant {
  /// nullopt encodes +∞: every k-cochain is a cocycle.
  std::optional<Rational> value;
  /// A cochain attaining the minimum ratio.
  std::optional<F2Cochain> minimizer;
};

/// min over α ∉ Z^k of ‖δα‖ / d_w(α, Z^k). Exhaustive; needs
/// |X(k)| ≤ kExhaustiveDimLimit and k < dim X.
ExpansionConstant cocycle_expansion_constant(const SimplicialComplex& x, int k);

/// Per-k constants for k = 0..dim-1 together with their minimum (the single
/// η in the cocycle-expander condition).
struct ExpansionProfile {
  std::vector<ExpansionConstant> per_dim;
  std::optional<Rational> minimum;
};
ExpansionProfile cocycle_expansion_profile(const SimplicialComplex& x);

struct Cosystole {
  /// nullopt encodes "coboundary-only": H^k = 0.
  std::optional<Rational> value;
  /// A non-coboundary cocycle attaining the minimum.
  std::optional<F2Cochain> witness;
};

/// min over α ∈ Z^k \ B^k of d_w(α, B^k). Exhaustive; needs
/// dim Z^k ≤ kExhaustiveDimLimit.
Cosystole cosystole(const SimplicialComplex& x, int k);

/// Some β ∈ C^{k-1} with δβ = target, or nullopt when target ∉ B^k.
std::optional<F2Cochain> solve_coboundary(const SimplicialComplex& x, const F2Cochain& target);

}  // namespace sofic

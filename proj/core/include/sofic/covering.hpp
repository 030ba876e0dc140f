#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// Permutation attached to the oriented edge x→y by an action of the
/// fundamental-group presentation (generator "x>y").
const ErrPerm& edge_image(const AlmostAction& f, Vertex x, Vertex y);

/// The covering space Y → X of a genuine action f of π₁(X) on a fiber Σ.
/// Vertex (x, ⋆) of Y has label x·|Σ| + ⋆, so projection preserves vertex
/// order and lifted cells stay sorted.
class Covering {
 public:
  const SimplicialComplex& base() const { return base_; }
  const SimplicialComplex& total() const { return total_; }
  const AlmostAction& action() const { return action_; }
  std::uint32_t fiber_size() const { return fiber_; }

  Vertex lift_vertex(Vertex x, Point star) const { return x * fiber_ + star; }
  Vertex base_vertex(Vertex y) const { return y / fiber_; }
  Point fiber_point(Vertex y) const { return y % fiber_; }

  /// Index in X(k) of the image of the k-cell `y_index` of Y.
  std::size_t project(int k, std::size_t y_index) const { return projection_.at(k).at(y_index); }
  /// Index in Y(k) of the lift of X-cell `x_index` whose first vertex lies
  /// over fiber point ⋆.
  std::size_t lift(int k, std::size_t x_index, Point star) const {
    return lifts_.at(k).at(x_index * fiber_ + star);
  }

  /// 𝒫 maps the star of every vertex of Y bijectively onto the star of
  /// its image.
  bool star_bijective() const;

  friend Covering build_cover(const SimplicialComplex& x, const AlmostAction& f);

 private:
  SimplicialComplex base_;
  SimplicialComplex total_;
  AlmostAction action_;
  std::uint32_t fiber_ = 0;
  std::vector<std::vector<std::size_t>> projection_;
  std::vector<std::vector<std::size_t>> lifts_;
};

/// Y(0) = X(0) × Σ; (x,⋆)(y,⋄) is an edge iff f(xy).⋄ = ⋆; the cell
/// v₀ < … < v_k lifts at ⋆ to the vertices (v_i, f(v_i v₀).⋆). Throws
/// InputError unless f is total with defect exactly 0 and has a generator
/// for every oriented edge.
Covering build_cover(const SimplicialComplex& x, const AlmostAction& f);

/// True when δα = 0; every top-dimensional cochain is a cocycle.
bool is_cocycle(const SimplicialComplex& x, const F2Cochain& alpha);

/// φ' = φ ∘ 𝒫. Throws InputError unless φ is a 2-cocycle.
F2Cochain pull_back_cocycle(const F2Cochain& phi, const Covering& c);

enum class EdgeType : std::uint8_t { first, second };

struct ZetaCochain {
  F2Cochain zeta;                ///< on Y(1)
  std::vector<EdgeType> types;   ///< per Y(1) index
  std::size_t first_type = 0;
};

/// For the Y-edge (x,⋆)(y,⋄) with x < y and f(xy).⋄ = ⋆: first type when
/// ⋄ ∈ Ω and the induced action agrees, |ψ(xy).+⋄| = ⋆; then ζ = 1 iff
/// ψ(xy).+⋄ is negative. Second-type edges get 0. ψ acts on Ω± for an
/// initial segment Ω = [0, |Ω|) of Σ and must commute with -Id.
ZetaCochain zeta_cochain(const AlmostAction& psi, const AlmostAction& f, const Covering& c);

struct ComponentRow {
  std::size_t component = 0;
  std::size_t vertices = 0;
  std::size_t triangles = 0;
  Rational dw;  ///< d_w(φ'|Y₀, δζ|Y₀) with Y₀'s own weights
};

struct ContradictionReport {
  Rational epsilon;        ///< def(ψ)
  Rational rho;            ///< d_H(f, induced quotient of ψ)
  Rational event1;         ///< weight of triangles with a second-type edge
  Rational event2;         ///< weight of all-first-type triangles failing their relation at the base point
  Rational dw_total;       ///< d_w(φ', δζ) on all of Y
  Rational dw_best;        ///< min over components
  std::vector<ComponentRow> components;
  std::size_t first_type_triangles = 0;   ///< triangles where the sign computation applies
  std::size_t triangle_identity_failures = 0;  ///< must be 0
  bool pullback_is_cocycle = false;

  /// ε + 4ρ
  Rational bound() const;
  bool holds() const { return dw_best <= bound() && triangle_identity_failures == 0; }
};

/// Builds the cover of f, pulls φ back, forms ζ from ψ, and measures how
/// far φ' is from the coboundary δζ. ψ must act on the extension
/// presentation (edge generators plus "tau") and commute with -Id; f acts on
/// the fundamental-group presentation with defect 0.
ContradictionReport contradiction_experiment(const SimplicialComplex& x, const F2Cochain& phi,
                                             const AlmostAction& psi, const AlmostAction& f);

/// Spanning tree of v₀'s component of Y containing every component of
/// 𝒫⁻¹(T) there; extra edges are the lexicographically first ones that
/// join two pieces.
RootedTree cover_tree(const Covering& c, const RootedTree& t, Vertex v0);

}  // namespace sofic

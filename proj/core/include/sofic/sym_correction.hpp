#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sofic/sym_cochain.hpp"

namespace sofic {

/// Number of (w, i) with uvw a triangle and f(wu)f(vw)f(uv).i defined and
/// different from i.
std::size_t edge_violations(const SymCochain& f, Vertex u, Vertex v);

/// Some oriented boundary cycle of the triangle, started at any of its
/// three vertices with index j, is defined and does not return to j.
bool triangle_violates(const SymCochain& f, const Cell& triangle, Point j);

enum class IndexAction : std::uint8_t { unchanged, assigned, deleted };

struct EdgeCorrection {
  SymCochain f;
  std::vector<IndexAction> actions;  ///< per index of f(uv)
  std::vector<Point> assigned_to;    ///< target when assigned, else kError
  /// Indices that lost their value because an assignment claimed its image.
  std::vector<Point> displaced;
  std::string warning;
};

/// Majority vote over the link of uv. For each i the votes are
/// f(wv)f(uw).i over the w where this is defined. A value j with vote
/// fraction ≥ η₁ is assigned; if every fraction is < 1-η₁, i is deleted.
/// Assignments win over existing values with the same image; two
/// assignments to one image delete both. Only f(uv) changes.
EdgeCorrection single_edge_correction(const SymCochain& f, Vertex u, Vertex v, const Rational& eta1);

struct LinkSearch {
  std::uint64_t seed = 1;
  unsigned restarts = 4;
  std::uint64_t evaluation_budget = 20'000;
};

struct VertexCorrection {
  SymCochain f;
  /// g(u) for the link vertices, in increasing order of u.
  std::vector<Vertex> link_vertices;
  std::vector<ErrPerm> g;
  Rational link_distance;  ///< dist(δg, f) on the link edges
  bool exhaustive = false;
  std::vector<Point> adopted;
  std::vector<Point> deleted;
};

/// v-local violation mass of index i: weight (in the link of v) of link
/// edges uw whose triangle uvw violates i in the sense of
/// triangle_violates restricted to cycles starting at u or w.
Rational vertex_violation_mass(const SymCochain& f, Vertex v, Point i);

/// Picks g on the link of v approximately minimizing dist(δg, f) with
/// δg(uw) = g(w)⁻¹ g(u), starting from g(u) = f(uv). Index i is adopted
/// (f(uv).i := g(u).i for every u) when this lowers the violation mass by
/// at least η₁; otherwise it is deleted from every edge at v when its mass
/// exceeds η₂.
VertexCorrection vertex_link_correction(const SymCochain& f, Vertex v, const Rational& eta1,
                                        const Rational& eta2, const LinkSearch& search = {});

struct DeletionReport {
  SymCochain f;
  std::vector<Point> deleted;
  std::size_t violated_pairs = 0;  ///< (j, triangle) pairs before deletion
  std::size_t total_pairs = 0;     ///< n · |X(2)|
  Rational epsilon;                ///< violated_pairs / total_pairs
  /// #deleted ≤ ε · n · |X(2)|
  bool markov_bound_holds() const;
  /// Violated pairs left after deletion (0 by construction).
  std::size_t remaining_violations = 0;
};

/// Removes from every edge (domain and image) each index j that violates
/// some triangle.
DeletionReport global_deletion(const SymCochain& f);

}  // namespace sofic

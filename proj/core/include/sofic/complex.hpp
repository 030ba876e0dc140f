#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sofic/rational.hpp"

namespace sofic {

using Vertex = std::uint32_t;

/// A cell is a strictly increasing tuple of vertex labels. A k-cell has
/// k+1 entries.
using Cell = std::vector<Vertex>;

struct CellHash {
  std::size_t operator()(const Cell& c) const noexcept;
};

/// Finite simplicial complex stored as its face lists, one sorted list per
/// dimension. Immutable after construction.
///
/// Vertex labels need not be contiguous: X(0) is whatever vertices appear,
/// and vertex_bound() is one past the largest label that is allowed. Links
/// keep the labels of the ambient complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given top faces. All faces must have the same
  /// cardinality, so the result is pure.
  static SimplicialComplex from_top_faces(std::span<const Cell> top_faces,
                                          std::optional<Vertex> vertex_bound = std::nullopt);

  /// Downward closure of an arbitrary family of cells. Purity is not
  /// required; check is_pure() before asking for weights.
  static SimplicialComplex from_cells(std::span<const Cell> cells, Vertex vertex_bound);

  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  Vertex vertex_bound() const { return vertex_bound_; }
  bool empty() const { return faces_.empty(); }
  bool is_pure() const { return pure_; }

  std::size_t size(int k) const;
  const std::vector<Cell>& cells(int k) const;
  const Cell& cell(int k, std::size_t index) const { return faces_.at(k).at(index); }

  std::optional<std::size_t> index_of(const Cell& c) const;
  std::size_t require_index(const Cell& c) const;
  bool contains(const Cell& c) const { return index_of(c).has_value(); }

  /// Indices of the (k-1)-faces of the k-cell `index`; entry j omits the
  /// j-th vertex.
  const std::vector<std::size_t>& boundary(int k, std::size_t index) const {
    return boundary_.at(k).at(index);
  }
  /// Indices of the (k+1)-cells containing the k-cell `index`.
  const std::vector<std::size_t>& cofaces(int k, std::size_t index) const {
    return cofaces_.at(k).at(index);
  }

  /// Number of top-dimensional cells containing the given k-cell.
  std::size_t top_count(int k, std::size_t index) const { return top_count_.at(k).at(index); }

  /// Sorted neighbors of v in the 1-skeleton.
  const std::vector<Vertex>& neighbors(Vertex v) const;

  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest vertex.
  std::vector<std::vector<Vertex>> components() const;

  /// Subcomplex of all cells whose vertices lie in `vertices`.
  SimplicialComplex induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.faces_ == b.faces_;
  }

 private:
  void index_all();

  Vertex vertex_bound_ = 0;
  bool pure_ = true;
  std::vector<std::vector<Cell>> faces_;
  std::vector<std::unordered_map<Cell, std::size_t, CellHash>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> boundary_;
  std::vector<std::vector<std::vector<std::size_t>>> cofaces_;
  std::vector<std::vector<std::size_t>> top_count_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Ordered tuple of distinct vertices whose underlying set is a cell.
struct OrientedFace {
  std::vector<Vertex> vertices;

  Cell canonical() const;
  /// +1 if `vertices` is an even permutation of canonical(), -1 otherwise.
  int parity() const;
  OrientedFace reversed() const;
};

/// Validates `top_faces` and returns their downward closure.
/// Throws InputError on empty input or mixed cardinalities.
SimplicialComplex build_from_top_faces(const std::vector<std::vector<Vertex>>& top_faces);

/// w(σ) = (1 / C(d+1,k+1)) * Pr_{τ∈X(d)}[σ ⊆ τ]. Requires a pure complex.
Rational face_weight(const SimplicialComplex& x, const Cell& sigma);
Rational face_weight(const SimplicialComplex& x, int k, std::size_t index);

/// Integer form of the k-cell weights: w(σ_i) = numerators[i] / denominator.
struct WeightScale {
  std::vector<std::uint64_t> numerators;
  std::uint64_t denominator = 1;
};
WeightScale weight_scale(const SimplicialComplex& x, int k);

/// X_s = { t : t ∩ s = ∅, t ∪ s ∈ X }, on the ambient vertex labels.
SimplicialComplex link(const SimplicialComplex& x, const Cell& s);

struct RootedTree {
  Vertex root = 0;
  /// parent[v] for every vertex of the spanned component; the root maps to
  /// itself.
  std::map<Vertex, Vertex> parent;
  /// Tree edges as cells {a,b}, a < b, in discovery order.
  std::vector<Cell> edges;
  /// Vertices in BFS discovery order.
  std::vector<Vertex> order;

  bool contains(Vertex v) const { return parent.count(v) != 0; }
  bool has_edge(Vertex a, Vertex b) const;
  /// Vertex path from the root to v (inclusive).
  std::vector<Vertex> path_from_root(Vertex v) const;
};

/// Breadth-first spanning tree of root's component, smallest neighbor first.
RootedTree spanning_tree(const SimplicialComplex& x, Vertex root);

struct Letter {
  std::uint32_t generator = 0;
  bool inverse = false;
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

/// Finite presentation <S | R>. Generators are named symbols; relations
/// are words in generators and formal inverses.
class Presentation {
 public:
  std::uint32_t add_generator(const std::string& name);
  void add_relation(Word relation);

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& generator(std::uint32_t g) const { return generators_.at(g); }
  std::optional<std::uint32_t> find(const std::string& name) const;
  std::uint32_t require(const std::string& name) const;

  const std::vector<Word>& relations() const { return relations_; }
  bool has_relation(const Word& w) const;
  /// ℓ: the maximal relation length (0 when there are no relations).
  std::size_t max_relation_length() const;

  /// Parses "a b^-1 c" style words against this presentation.
  Word parse_word(const std::string& text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.generators_ == b.generators_ && a.relations_ == b.relations_;
  }

 private:
  std::vector<std::string> generators_;
  std::unordered_map<std::string, std::uint32_t> lookup_;
  std::vector<Word> relations_;
};

/// Generator name of the oriented edge x→y: "x>y".
std::string edge_generator_name(Vertex x, Vertex y);

/// Generators: both orientations of every edge in the tree's component.
/// Relations: both orientations of every tree edge (length 1), one
/// backtracking relation xy·yx per edge (x<y), and for each triangle x<y<z
/// the two cyclic orientations xy·yz·zx and xz·zy·yx.
Presentation fundamental_group_presentation(const SimplicialComplex& x, const RootedTree& t);

/// Complete graph on n vertices plus each triangle independently with
/// probability p. May be non-pure.
SimplicialComplex random_lm_complex(Vertex n, double p, std::uint64_t seed);

/// Rank of the abelianization of the presented group tensored with F2,
/// i.e. dim_F2 of H_1 computed from the relator exponent-sum matrix mod 2.
std::size_t abelianization_rank_mod2(const Presentation& p);

}  // namespace sofic

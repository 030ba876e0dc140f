#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sofic/complex.hpp"
#include "sofic/perm.hpp"
#include "sofic/rational.hpp"

namespace sofic {

/// An i-cochain with values in partial injections of [n]. The value is
/// stored for the increasing orientation of each cell; an odd reordering
/// reads the partial inverse.
class SymCochain {
 public:
  SymCochain() = default;
  /// Identity on every cell.
  SymCochain(std::shared_ptr<const SimplicialComplex> x, int degree, std::uint32_t n);

  const SimplicialComplex& complex() const { return *complex_; }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const { return complex_; }
  int degree() const { return degree_; }
  std::uint32_t n() const { return n_; }

  /// Value on the increasing orientation of cell `index` of X(degree).
  const ErrPerm& at(std::size_t index) const { return forward_.at(index); }
  /// Value on an oriented cell.
  const ErrPerm& value(const std::vector<Vertex>& oriented) const;
  /// f(uv) for degree 1.
  const ErrPerm& edge(Vertex u, Vertex v) const;

  void set(std::size_t index, ErrPerm p);
  void set(const std::vector<Vertex>& oriented, ErrPerm p);
  void set_edge(Vertex u, Vertex v, ErrPerm p) { set(std::vector<Vertex>{u, v}, std::move(p)); }

  /// Removes j from the domain and from the image of every value.
  void remove_index(Point j);

  friend bool operator==(const SymCochain& a, const SymCochain& b) {
    return a.degree_ == b.degree_ && a.n_ == b.n_ && a.forward_ == b.forward_;
  }

 private:
  std::shared_ptr<const SimplicialComplex> complex_;
  int degree_ = 0;
  std::uint32_t n_ = 0;
  std::vector<ErrPerm> forward_;
  std::vector<ErrPerm> backward_;
};

/// f(u_{m-1}u_m) ∘ … ∘ f(u_0u_1) applied to i, for a degree-1 cochain and a
/// vertex path u_0 … u_m. kError once any step is undefined.
Point path_image(const SymCochain& f, const std::vector<Vertex>& path, Point i);

/// Pr over (s, i) with s ~ w on X(degree) and i uniform on [max(n_f, n_g)]
/// that f(s).i ≠ g(s).i. Undefined matches only undefined.
Rational sym_distance(const SymCochain& f, const SymCochain& g);

/// wt(f) = sym_distance(f, Id_n).
Rational sym_weight(const SymCochain& f);

enum class Strictness { lenient, strict };

struct DeltaWeight {
  /// Weight of triangles uvw having an index i with f(wu)f(vw)f(uv).i ≠ i.
  Rational plain;
  /// E over triangles of the fraction of such indices.
  Rational robust;
};

/// Lenient skips indices whose composite is undefined; strict counts them
/// as violations.
DeltaWeight sym_delta_weight(const SymCochain& f, Strictness mode = Strictness::lenient);

/// A permutation of [n] for every vertex, indexed like X(0).
using VertexPerms = std::vector<ErrPerm>;

/// δh(uv) = h(v) h(u)⁻¹.
SymCochain sym_coboundary(std::shared_ptr<const SimplicialComplex> x, const VertexPerms& h);

/// f^h(uv) = h(v)⁻¹ f(uv) h(u).
SymCochain coboundary_shift(const SymCochain& f, const VertexPerms& h);

struct MinimalitySearch {
  /// Enumerate every h when (n!)^{|X(0)|} is at most this.
  std::uint64_t exhaustive_limit = 10'000'000;
  std::uint64_t evaluation_budget = 200'000;
  unsigned restarts = 8;
  std::uint64_t seed = 1;
};

struct MinimalityVerdict {
  bool violation_found = false;
  /// The violating shift, when found.
  std::optional<VertexPerms> witness;
  Rational lhs;  ///< η (wt(f) - wt(f^h)) for the best h
  Rational rhs;  ///< dist(f, f^h) for the best h
  bool exhaustive = false;
  std::uint64_t evaluated = 0;
};

/// Looks for h with η (wt(f) - wt(f^h)) > dist(f, f^h). Without a witness
/// the verdict is "none found", exhaustive or within the stated budget.
MinimalityVerdict eta_minimality_check(const SymCochain& f, const Rational& eta,
                                       const MinimalitySearch& search = {});

/// f_s(t) = f(s, t) on the link of the j-cell s, read with s first and in
/// increasing order. Requires degree > dim s.
SymCochain localize(const SymCochain& f, const Cell& s);

struct LocalMinimalityRow {
  Cell face;
  MinimalityVerdict verdict;
};

/// eta_minimality_check on f_s for every face s whose localization has
/// degree 1 (the only degree where shifts are defined).
std::vector<LocalMinimalityRow> eta_local_minimality(const SymCochain& f, const Rational& eta,
                                                     const MinimalitySearch& search = {});

}  // namespace sofic

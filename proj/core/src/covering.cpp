#include "sofic/covering.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "sofic/error.hpp"

namespace sofic {

const ErrPerm& edge_image(const AlmostAction& f, Vertex x, Vertex y) {
  const auto g = f.presentation().find(edge_generator_name(x, y));
  if (!g) throw InputError("action has no generator for the oriented edge " + edge_generator_name(x, y));
  return f.image(*g);
}

Covering build_cover(const SimplicialComplex& x, const AlmostAction& f) {
  if (x.empty()) throw InputError("cannot cover an empty complex");
  if (!f.is_total()) throw InputError("covering needs every generator to permute the whole fiber");
  if (defect(f) != 0) throw InputError("action has positive defect; stabilize it to a genuine action first");
  const std::uint32_t n = f.universe();
  if (n == 0) throw InputError("covering needs a nonempty fiber");

  Covering c;
  c.base_ = x;
  c.action_ = f;
  c.fiber_ = n;

  std::vector<Cell> lifted;
  for (int k = 0; k <= x.dim(); ++k) {
    for (const Cell& cell : x.cells(k)) {
      std::vector<const ErrPerm*> to_first;
      for (std::size_t i = 1; i < cell.size(); ++i) to_first.push_back(&edge_image(f, cell[i], cell[0]));
      for (Point star = 0; star < n; ++star) {
        Cell y{c.lift_vertex(cell[0], star)};
        for (std::size_t i = 1; i < cell.size(); ++i)
          y.push_back(c.lift_vertex(cell[i], (*to_first[i - 1])(star)));
        lifted.push_back(std::move(y));
      }
    }
  }
  c.total_ = SimplicialComplex::from_cells(lifted, x.vertex_bound() * n);

  c.projection_.resize(x.dim() + 1);
  c.lifts_.resize(x.dim() + 1);
  for (int k = 0; k <= x.dim(); ++k) {
    if (c.total_.size(k) != n * x.size(k))
      throw InputError("lifted complex has the wrong number of " + std::to_string(k) +
                       "-cells; the action is not compatible with the complex");
    c.projection_[k].resize(c.total_.size(k));
    c.lifts_[k].resize(x.size(k) * n);
    for (std::size_t j = 0; j < c.total_.size(k); ++j) {
      const Cell& y = c.total_.cell(k, j);
      Cell down;
      for (Vertex v : y) down.push_back(c.base_vertex(v));
      const std::size_t xi = x.require_index(down);
      c.projection_[k][j] = xi;
      c.lifts_[k][xi * n + c.fiber_point(y[0])] = j;
    }
  }
  return c;
}

bool Covering::star_bijective() const {
  const Vertex xb = base_.vertex_bound();
  const Vertex yb = total_.vertex_bound();
  using Key = std::tuple<Vertex, int, std::size_t>;
  std::unordered_set<Key, boost::hash<Key>> seen;
  for (int k = 1; k <= total_.dim(); ++k) {
    std::vector<std::size_t> star_x(xb, 0);
    std::vector<std::size_t> star_y(yb, 0);
    for (const Cell& cell : base_.cells(k))
      for (Vertex v : cell) ++star_x[v];
    for (std::size_t j = 0; j < total_.size(k); ++j) {
      const std::size_t xi = projection_[k][j];
      for (Vertex v : total_.cell(k, j)) {
        ++star_y[v];
        if (!seen.emplace(v, k, xi).second) return false;
      }
    }
    for (const Cell& v : total_.cells(0))
      if (star_y[v[0]] != star_x[base_vertex(v[0])]) return false;
  }
  return true;
}

bool is_cocycle(const SimplicialComplex& x, const F2Cochain& alpha) {
  if (alpha.k == x.dim()) return alpha.bits.size() == x.size(alpha.k);
  return coboundary(x, alpha).is_zero();
}

F2Cochain pull_back_cocycle(const F2Cochain& phi, const Covering& c) {
  if (phi.k != 2) throw InputError("pull_back_cocycle expects a 2-cochain");
  if (!is_cocycle(c.base(), phi)) throw InputError("cochain is not a cocycle on the base");
  F2Cochain out = F2Cochain::zero(c.total(), 2);
  for (std::size_t j = 0; j < c.total().size(2); ++j)
    if (phi.bits.test(c.project(2, j))) out.bits.set(j);
  return out;
}

namespace {

// Generator indices of ψ and of the induced action for every X edge x<y.
struct EdgeGenerators {
  std::vector<std::uint32_t> forward;   // x>y
  std::vector<std::uint32_t> backward;  // y>x
};

EdgeGenerators edge_generators(const SimplicialComplex& x, const Presentation& p) {
  EdgeGenerators e;
  for (const Cell& edge : x.cells(1)) {
    e.forward.push_back(p.require(edge_generator_name(edge[0], edge[1])));
    e.backward.push_back(p.require(edge_generator_name(edge[1], edge[0])));
  }
  return e;
}

}  // namespace

ZetaCochain zeta_cochain(const AlmostAction& psi, const AlmostAction& f, const Covering& c) {
  if (!(c.action() == f)) throw InputError("the covering was not built from this action");
  const AlmostAction phi = induced_quotient_action(psi, f.presentation());
  const std::uint32_t omega = phi.universe();
  if (omega > c.fiber_size()) throw InputError("the signed action's base is larger than the fiber");
  const SimplicialComplex& x = c.base();
  const SimplicialComplex& y = c.total();
  const EdgeGenerators psi_gens = edge_generators(x, psi.presentation());
  const EdgeGenerators phi_gens = edge_generators(x, phi.presentation());

  ZetaCochain out;
  out.zeta = F2Cochain::zero(y, 1);
  out.types.assign(y.size(1), EdgeType::second);
  for (std::size_t j = 0; j < y.size(1); ++j) {
    const Cell& e = y.cell(1, j);
    const Point star = c.fiber_point(e[0]);
    const Point diamond = c.fiber_point(e[1]);
    const std::size_t xi = c.project(1, j);
    if (diamond >= omega) continue;
    if (phi.image(phi_gens.forward[xi])(diamond) != star) continue;
    out.types[j] = EdgeType::first;
    ++out.first_type;
    if (is_negative(psi.image(psi_gens.forward[xi])(plus(diamond)))) out.zeta.bits.set(j);
  }
  return out;
}

Rational ContradictionReport::bound() const { return epsilon + Rational(4) * rho; }

ContradictionReport contradiction_experiment(const SimplicialComplex& x, const F2Cochain& phi,
                                             const AlmostAction& psi, const AlmostAction& f) {
  if (!x.is_pure() || x.dim() < 2) throw InputError("experiment needs a pure complex of dimension at least 2");
  ContradictionReport rep;
  rep.epsilon = defect(psi);
  const AlmostAction quotient = induced_quotient_action(psi, f.presentation());
  rep.rho = action_distance(f, quotient);

  const Covering cover = build_cover(x, f);
  const F2Cochain phi_y = pull_back_cocycle(phi, cover);
  rep.pullback_is_cocycle = is_cocycle(cover.total(), phi_y);
  const ZetaCochain z = zeta_cochain(psi, f, cover);
  const SimplicialComplex& y = cover.total();
  const F2Cochain mismatch = phi_y + coboundary(y, z.zeta);
  rep.dw_total = weighted_norm(y, mismatch);

  const std::uint32_t tau = psi.presentation().require("tau");
  const EdgeGenerators gens = edge_generators(x, psi.presentation());
  std::vector<ErrPerm> inverse_forward;
  for (auto g : gens.forward) inverse_forward.push_back(psi.image(g).inverse());
  const WeightScale w2 = weight_scale(y, 2);
  std::uint64_t event1 = 0;
  std::uint64_t event2 = 0;
  for (std::size_t j = 0; j < y.size(2); ++j) {
    const auto& edges = y.boundary(2, j);  // entry i omits vertex i: {yz, xz, xy}
    const bool all_first = std::all_of(edges.begin(), edges.end(),
                                       [&](std::size_t e) { return z.types[e] == EdgeType::first; });
    if (!all_first) {
      event1 += w2.numerators[j];
      continue;
    }
    const Point sx = cover.fiber_point(y.cell(2, j)[0]);
    const bool twisted = phi.bits.test(cover.project(2, j));
    const std::size_t xy = cover.project(1, edges[2]);
    const std::size_t yz = cover.project(1, edges[0]);
    const std::size_t xz = cover.project(1, edges[1]);

    // Literal relation xy·yz·zx·τ^φ at +⋆x.
    Point p = twisted ? psi.image(tau)(plus(sx)) : plus(sx);
    p = psi.image(gens.backward[xz])(p);
    p = psi.image(gens.forward[yz])(p);
    p = psi.image(gens.forward[xy])(p);
    if (p != plus(sx)) event2 += w2.numerators[j];

    // Sign computation with the canonical orientation of every edge.
    Point q = inverse_forward[xz](plus(sx));
    q = q == kError ? kError : psi.image(gens.forward[yz])(q);
    q = q == kError ? kError : psi.image(gens.forward[xy])(q);
    if (q == with_sign(plus(sx), twisted)) {
      ++rep.first_type_triangles;
      if (mismatch.bits.test(j)) ++rep.triangle_identity_failures;
    }
  }
  rep.event1 = Rational(static_cast<unsigned long>(event1), static_cast<unsigned long>(w2.denominator));
  rep.event1.canonicalize();
  rep.event2 = Rational(static_cast<unsigned long>(event2), static_cast<unsigned long>(w2.denominator));
  rep.event2.canonicalize();

  // Per-component distances with each component's own weights.
  const int d = y.dim();
  const auto comps = y.components();
  std::vector<std::size_t> comp_of(y.vertex_bound(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (Vertex v : comps[i]) comp_of[v] = i;
  std::vector<std::uint64_t> tops(comps.size(), 0);
  std::vector<std::uint64_t> bad(comps.size(), 0);
  std::vector<std::size_t> tris(comps.size(), 0);
  for (const Cell& t : y.cells(d)) ++tops[comp_of[t[0]]];
  for (std::size_t j = 0; j < y.size(2); ++j) {
    const std::size_t ci = comp_of[y.cell(2, j)[0]];
    ++tris[ci];
    if (mismatch.bits.test(j)) bad[ci] += y.top_count(2, j);
  }
  // C(d+1, 3)
  const std::uint64_t choose = static_cast<std::uint64_t>(d + 1) * d * (d - 1) / 6;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (tops[i] == 0) continue;
    ComponentRow row;
    row.component = i;
    row.vertices = comps[i].size();
    row.triangles = tris[i];
    row.dw = Rational(static_cast<unsigned long>(bad[i]), static_cast<unsigned long>(choose * tops[i]));
    row.dw.canonicalize();
    if (rep.components.empty() || row.dw < rep.dw_best) rep.dw_best = row.dw;
    rep.components.push_back(std::move(row));
  }
  return rep;
}

RootedTree cover_tree(const Covering& c, const RootedTree& t, Vertex v0) {
  const SimplicialComplex& y = c.total();
  if (!y.contains(Cell{v0})) throw InputError("root is not a vertex of the cover");
  const Vertex bound = y.vertex_bound();

  std::vector<bool> in_comp(bound, false);
  std::deque<Vertex> queue{v0};
  in_comp[v0] = true;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : y.neighbors(u))
      if (!in_comp[w]) {
        in_comp[w] = true;
        queue.push_back(w);
      }
  }

  std::vector<Vertex> uf(bound);
  std::iota(uf.begin(), uf.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  std::vector<std::vector<Vertex>> adj(bound);
  auto take = [&](const Cell& e) {
    const Vertex a = find(e[0]);
    const Vertex b = find(e[1]);
    if (a == b) return;
    uf[a] = b;
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  };
  for (const Cell& te : t.edges) {
    const std::size_t xi = c.base().require_index(te);
    for (Point s = 0; s < c.fiber_size(); ++s) {
      const Cell& e = y.cell(1, c.lift(1, xi, s));
      if (in_comp[e[0]]) take(e);
    }
  }
  for (const Cell& e : y.cells(1))
    if (in_comp[e[0]]) take(e);

  RootedTree out;
  out.root = v0;
  out.parent[v0] = v0;
  out.order.push_back(v0);
  queue.push_back(v0);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    auto& nbrs = adj[u];
    std::sort(nbrs.begin(), nbrs.end());
    for (Vertex w : nbrs) {
      if (out.contains(w)) continue;
      out.parent[w] = u;
      out.order.push_back(w);
      out.edges.push_back(Cell{std::min(u, w), std::max(u, w)});
      queue.push_back(w);
    }
  }
  return out;
}

}  // namespace sofic

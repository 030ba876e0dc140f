#include "sofic/sym_correction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "sofic/error.hpp"
#include "sofic/rng.hpp"

namespace sofic {

namespace {

std::vector<Vertex> edge_link(const SimplicialComplex& x, Vertex u, Vertex v) {
  const std::size_t e = x.require_index(Cell{std::min(u, v), std::max(u, v)});
  std::vector<Vertex> out;
  if (x.dim() < 2) return out;
  for (std::size_t t : x.cofaces(1, e))
    for (Vertex w : x.cell(2, t))
      if (w != u && w != v) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

bool cycle_breaks(const SymCochain& f, const std::vector<Vertex>& cycle, Point j) {
  const Point img = path_image(f, cycle, j);
  return img != kError && img != j;
}

// Matches undefined sources to unused targets in increasing order.
ErrPerm complete(const ErrPerm& p) {
  std::vector<Point> im = p.images();
  std::vector<bool> used(im.size(), false);
  for (Point q : im)
    if (q != kError) used[q] = true;
  Point next = 0;
  for (Point& q : im) {
    if (q != kError) continue;
    while (used[next]) ++next;
    q = next;
    used[next] = true;
  }
  return ErrPerm(std::move(im));
}

// Sets f(uv).i := j; any other index already sent to j loses its value.
void assign(SymCochain& f, Vertex u, Vertex v, Point i, Point j) {
  std::vector<Point> im = f.edge(u, v).images();
  for (Point& q : im)
    if (q == j) q = kError;
  im[i] = j;
  f.set_edge(u, v, ErrPerm(std::move(im)));
}

void undefine(SymCochain& f, Vertex u, Vertex v, Point i) {
  std::vector<Point> im = f.edge(u, v).images();
  im[i] = kError;
  f.set_edge(u, v, ErrPerm(std::move(im)));
}

}  // namespace

std::size_t edge_violations(const SymCochain& f, Vertex u, Vertex v) {
  std::size_t bad = 0;
  for (Vertex w : edge_link(f.complex(), u, v))
    for (Point i = 0; i < f.n(); ++i)
      if (cycle_breaks(f, {u, v, w, u}, i)) ++bad;
  return bad;
}

bool triangle_violates(const SymCochain& f, const Cell& t, Point j) {
  const Vertex a = t[0], b = t[1], c = t[2];
  const std::vector<std::vector<Vertex>> cycles{{a, b, c, a}, {a, c, b, a}, {b, c, a, b},
                                                {b, a, c, b}, {c, a, b, c}, {c, b, a, c}};
  return std::any_of(cycles.begin(), cycles.end(), [&](const auto& cyc) { return cycle_breaks(f, cyc, j); });
}

EdgeCorrection single_edge_correction(const SymCochain& f, Vertex u, Vertex v, const Rational& eta1) {
  if (f.degree() != 1) throw InputError("edge correction works on 1-cochains");
  if (!(eta1 > Rational(1, 2)) || eta1 > 1) throw InputError("edge correction needs 1/2 < eta1 <= 1");
  const std::uint32_t n = f.n();
  EdgeCorrection out{f, std::vector<IndexAction>(n, IndexAction::unchanged), std::vector<Point>(n, kError), {}, {}};
  const std::vector<Vertex> ws = edge_link(f.complex(), u, v);
  if (ws.empty()) {
    out.warning = "edge " + std::to_string(u) + " " + std::to_string(v) + " lies in no triangle; nothing to vote on";
    return out;
  }

  for (Point i = 0; i < n; ++i) {
    std::map<Point, std::uint64_t> votes;
    std::uint64_t defined = 0;
    for (Vertex w : ws) {
      const Point j = path_image(f, {u, w, v}, i);
      if (j == kError) continue;
      ++votes[j];
      ++defined;
    }
    if (defined == 0) continue;
    bool any_weak = false;
    for (const auto& [j, c] : votes) {
      const Rational frac(static_cast<unsigned long>(c), static_cast<unsigned long>(defined));
      if (frac >= eta1) {
        out.actions[i] = IndexAction::assigned;
        out.assigned_to[i] = j;
        break;
      }
      if (frac >= 1 - eta1) any_weak = true;
    }
    if (out.actions[i] == IndexAction::unchanged && !any_weak) out.actions[i] = IndexAction::deleted;
  }

  std::vector<std::uint32_t> claims(n, 0);
  for (Point i = 0; i < n; ++i)
    if (out.actions[i] == IndexAction::assigned) ++claims[out.assigned_to[i]];
  std::vector<Point> im = f.edge(u, v).images();
  for (Point i = 0; i < n; ++i) {
    if (out.actions[i] == IndexAction::assigned && claims[out.assigned_to[i]] > 1) {
      out.actions[i] = IndexAction::deleted;
      out.assigned_to[i] = kError;
    }
  }
  for (Point i = 0; i < n; ++i) {
    switch (out.actions[i]) {
      case IndexAction::deleted:
        im[i] = kError;
        break;
      case IndexAction::assigned:
        im[i] = out.assigned_to[i];
        break;
      case IndexAction::unchanged:
        if (im[i] != kError && claims[im[i]] == 1) {
          // the single claimer of this image is another index
          im[i] = kError;
          out.displaced.push_back(i);
        }
        break;
    }
  }
  out.f.set_edge(u, v, ErrPerm(std::move(im)));
  return out;
}

Rational vertex_violation_mass(const SymCochain& f, Vertex v, Point i) {
  const SimplicialComplex l = link(f.complex(), Cell{v});
  if (l.empty() || l.dim() < 1) return Rational(0);
  const WeightScale w = weight_scale(l, 1);
  std::uint64_t bad = 0;
  for (std::size_t e = 0; e < l.size(1); ++e) {
    const Vertex a = l.cell(1, e)[0];
    const Vertex b = l.cell(1, e)[1];
    if (cycle_breaks(f, {a, v, b, a}, i) || cycle_breaks(f, {a, b, v, a}, i) ||
        cycle_breaks(f, {b, a, v, b}, i) || cycle_breaks(f, {b, v, a, b}, i))
      bad += w.numerators[e];
  }
  Rational q(static_cast<unsigned long>(bad), static_cast<unsigned long>(w.denominator));
  q.canonicalize();
  return q;
}

VertexCorrection vertex_link_correction(const SymCochain& f, Vertex v, const Rational& eta1,
                                        const Rational& eta2, const LinkSearch& search) {
  if (f.degree() != 1) throw InputError("vertex correction works on 1-cochains");
  const SimplicialComplex l = link(f.complex(), Cell{v});
  if (l.empty() || l.dim() < 1) throw InputError("vertex " + std::to_string(v) + " has no link edges");
  const std::uint32_t n = f.n();
  const WeightScale w = weight_scale(l, 1);

  VertexCorrection out{f, {}, {}, {}, false, {}, {}};
  for (const Cell& c : l.cells(0)) out.link_vertices.push_back(c[0]);
  const std::vector<Vertex>& us = out.link_vertices;
  auto pos = [&](Vertex u) {
    return static_cast<std::size_t>(std::lower_bound(us.begin(), us.end(), u) - us.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> link_edges;
  for (const Cell& e : l.cells(1)) link_edges.emplace_back(pos(e[0]), pos(e[1]));

  // Scaled dist(δg, f) on the link: Σ w(uw) · #{i : g(w)⁻¹g(u).i ≠ f(uw).i}.
  auto cost = [&](const std::vector<ErrPerm>& g) {
    std::uint64_t total = 0;
    for (std::size_t e = 0; e < link_edges.size(); ++e) {
      const auto [a, b] = link_edges[e];
      const ErrPerm gb_inv = g[b].inverse();
      const ErrPerm& fe = f.edge(us[a], us[b]);
      std::uint64_t bad = 0;
      for (Point i = 0; i < n; ++i)
        if (gb_inv(g[a](i)) != fe(i)) ++bad;
      total += bad * w.numerators[e];
    }
    return total;
  };

  std::vector<ErrPerm> best;
  for (Vertex u : us) best.push_back(complete(f.edge(u, v)));
  std::uint64_t best_cost = cost(best);

  if (us.size() <= 3 && n <= 4) {
    out.exhaustive = true;
    std::vector<std::vector<Point>> perms;
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::size_t> digit(us.size(), 0);
    std::vector<ErrPerm> g(us.size(), ErrPerm(perms[0]));
    while (true) {
      const std::uint64_t c = cost(g);
      if (c < best_cost) {
        best_cost = c;
        best = g;
      }
      std::size_t k = 0;
      for (; k < us.size(); ++k) {
        if (++digit[k] < perms.size()) {
          g[k] = ErrPerm(perms[digit[k]]);
          break;
        }
        digit[k] = 0;
        g[k] = ErrPerm(perms[0]);
      }
      if (k == us.size()) break;
    }
  } else {
    SplitMix64 rng(search.seed);
    std::uint64_t evaluated = 0;
    std::vector<std::vector<ErrPerm>> starts{best};
    for (unsigned r = 0; r < search.restarts; ++r) {
      std::vector<ErrPerm> g;
      for (std::size_t k = 0; k < us.size(); ++k) g.push_back(ErrPerm(rng.permutation(n)));
      starts.push_back(std::move(g));
    }
    for (auto g : starts) {
      std::uint64_t cur = cost(g);
      ++evaluated;
      bool improved = true;
      while (improved && evaluated < search.evaluation_budget) {
        improved = false;
        for (std::size_t k = 0; k < us.size() && !improved; ++k)
          for (Point a = 0; a < n && !improved; ++a)
            for (Point b = a + 1; b < n && !improved; ++b) {
              std::vector<Point> im = g[k].images();
              std::swap(im[a], im[b]);
              std::vector<ErrPerm> cand = g;
              cand[k] = ErrPerm(std::move(im));
              const std::uint64_t c = cost(cand);
              ++evaluated;
              if (c < cur) {
                cur = c;
                g = std::move(cand);
                improved = true;
              }
            }
      }
      if (cur < best_cost) {
        best_cost = cur;
        best = g;
      }
      if (evaluated >= search.evaluation_budget) break;
    }
  }
  out.g = best;
  out.link_distance = Rational(static_cast<unsigned long>(best_cost),
                               static_cast<unsigned long>(w.denominator * std::max<std::uint32_t>(n, 1)));
  out.link_distance.canonicalize();

  for (Point i = 0; i < n; ++i) {
    const Rational before = vertex_violation_mass(out.f, v, i);
    SymCochain trial = out.f;
    for (std::size_t k = 0; k < us.size(); ++k) assign(trial, us[k], v, i, out.g[k](i));
    const Rational after = vertex_violation_mass(trial, v, i);
    if (before - after >= eta1) {
      out.f = std::move(trial);
      out.adopted.push_back(i);
    } else if (before > eta2) {
      for (Vertex u : us) undefine(out.f, u, v, i);
      out.deleted.push_back(i);
    }
  }
  return out;
}

bool DeletionReport::markov_bound_holds() const {
  return Rational(static_cast<unsigned long>(deleted.size())) <=
         epsilon * Rational(static_cast<unsigned long>(total_pairs));
}

DeletionReport global_deletion(const SymCochain& f) {
  if (f.degree() != 1) throw InputError("deletion works on 1-cochains");
  const SimplicialComplex& x = f.complex();
  DeletionReport rep{f, {}, 0, 0, Rational(0), 0};
  const std::size_t triangles = x.dim() >= 2 ? x.size(2) : 0;
  rep.total_pairs = triangles * f.n();
  std::vector<bool> marked(f.n(), false);
  for (std::size_t t = 0; t < triangles; ++t)
    for (Point j = 0; j < f.n(); ++j)
      if (triangle_violates(f, x.cell(2, t), j)) {
        ++rep.violated_pairs;
        marked[j] = true;
      }
  for (Point j = 0; j < f.n(); ++j)
    if (marked[j]) {
      rep.f.remove_index(j);
      rep.deleted.push_back(j);
    }
  if (rep.total_pairs > 0) {
    rep.epsilon = Rational(static_cast<unsigned long>(rep.violated_pairs),
                           static_cast<unsigned long>(rep.total_pairs));
    rep.epsilon.canonicalize();
  }
  for (std::size_t t = 0; t < triangles; ++t)
    for (Point j = 0; j < f.n(); ++j)
      if (triangle_violates(rep.f, x.cell(2, t), j)) ++rep.remaining_violations;
  return rep;
}

}  // namespace sofic

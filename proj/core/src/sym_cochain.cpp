#include "sofic/sym_cochain.hpp"

#include <algorithm>
#include <numeric>

#include "sofic/error.hpp"
#include "sofic/rng.hpp"

namespace sofic {

SymCochain::SymCochain(std::shared_ptr<const SimplicialComplex> x, int degree, std::uint32_t n)
    : complex_(std::move(x)), degree_(degree), n_(n) {
  if (!complex_) throw InputError("cochain needs a complex");
  if (degree < 0 || degree > complex_->dim())
    throw InputError("degree " + std::to_string(degree) + " out of range for the complex");
  forward_.assign(complex_->size(degree), ErrPerm::identity(n));
  backward_ = forward_;
}

const ErrPerm& SymCochain::value(const std::vector<Vertex>& oriented) const {
  const OrientedFace face{oriented};
  const std::size_t idx = complex_->require_index(face.canonical());
  return face.parity() > 0 ? forward_[idx] : backward_[idx];
}

const ErrPerm& SymCochain::edge(Vertex u, Vertex v) const {
  const std::size_t idx = complex_->require_index(Cell{std::min(u, v), std::max(u, v)});
  return u < v ? forward_[idx] : backward_[idx];
}

void SymCochain::set(std::size_t index, ErrPerm p) {
  if (p.universe() != n_)
    throw InputError("value acts on " + std::to_string(p.universe()) + " indices, expected " +
                     std::to_string(n_));
  backward_.at(index) = p.inverse();
  forward_.at(index) = std::move(p);
}

void SymCochain::set(const std::vector<Vertex>& oriented, ErrPerm p) {
  const OrientedFace face{oriented};
  const std::size_t idx = complex_->require_index(face.canonical());
  set(idx, face.parity() > 0 ? std::move(p) : p.inverse());
}

void SymCochain::remove_index(Point j) {
  for (std::size_t idx = 0; idx < forward_.size(); ++idx) {
    std::vector<Point> im = forward_[idx].images();
    if (j < im.size()) im[j] = kError;
    for (Point& q : im)
      if (q == j) q = kError;
    set(idx, ErrPerm(std::move(im)));
  }
}

Point path_image(const SymCochain& f, const std::vector<Vertex>& path, Point i) {
  for (std::size_t k = 0; k + 1 < path.size() && i != kError; ++k) i = f.edge(path[k], path[k + 1])(i);
  return i;
}

namespace {

Rational ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return Rational(0);
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

void require_same_shape(const SymCochain& f, const SymCochain& g) {
  if (f.degree() != g.degree()) throw InputError("cochains have different degrees");
  if (f.complex_ptr() != g.complex_ptr() && !(f.complex() == g.complex()))
    throw InputError("cochains live on different complexes");
}

}  // namespace

Rational sym_distance(const SymCochain& f, const SymCochain& g) {
  require_same_shape(f, g);
  const std::uint32_t m = std::max(f.n(), g.n());
  if (m == 0) return Rational(0);
  const WeightScale w = weight_scale(f.complex(), f.degree());
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < w.numerators.size(); ++s) {
    std::uint64_t bad = 0;
    for (Point i = 0; i < m; ++i)
      if (f.at(s)(i) != g.at(s)(i)) ++bad;
    total += bad * w.numerators[s];
  }
  return ratio(total, w.denominator * m);
}

Rational sym_weight(const SymCochain& f) {
  return sym_distance(f, SymCochain(f.complex_ptr(), f.degree(), f.n()));
}

DeltaWeight sym_delta_weight(const SymCochain& f, Strictness mode) {
  if (f.degree() != 1) throw InputError("delta weight is defined for 1-cochains");
  if (f.complex().dim() < 2) throw InputError("delta weight needs triangles");
  const WeightScale w = weight_scale(f.complex(), 2);
  std::uint64_t plain = 0;
  std::uint64_t robust = 0;
  for (std::size_t t = 0; t < w.numerators.size(); ++t) {
    const Cell& c = f.complex().cell(2, t);
    const std::vector<Vertex> cycle{c[0], c[1], c[2], c[0]};
    std::uint64_t bad = 0;
    for (Point i = 0; i < f.n(); ++i) {
      const Point img = path_image(f, cycle, i);
      if (img == kError ? mode == Strictness::strict : img != i) ++bad;
    }
    if (bad > 0) plain += w.numerators[t];
    robust += bad * w.numerators[t];
  }
  DeltaWeight out;
  out.plain = ratio(plain, w.denominator);
  out.robust = ratio(robust, w.denominator * f.n());
  return out;
}

SymCochain sym_coboundary(std::shared_ptr<const SimplicialComplex> x, const VertexPerms& h) {
  if (h.size() != x->size(0)) throw InputError("need one permutation per vertex");
  const std::uint32_t n = h.empty() ? 0 : h[0].universe();
  SymCochain out(x, 1, n);
  for (std::size_t e = 0; e < x->size(1); ++e) {
    const Cell& c = x->cell(1, e);
    const ErrPerm& hu = h[x->require_index(Cell{c[0]})];
    const ErrPerm& hv = h[x->require_index(Cell{c[1]})];
    out.set(e, hv.after(hu.inverse()));
  }
  return out;
}

SymCochain coboundary_shift(const SymCochain& f, const VertexPerms& h) {
  if (f.degree() != 1) throw InputError("coboundary shifts are defined only for 1-cochains");
  const SimplicialComplex& x = f.complex();
  if (h.size() != x.size(0)) throw InputError("need one permutation per vertex");
  SymCochain out = f;
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const Cell& c = x.cell(1, e);
    const ErrPerm& hu = h[x.require_index(Cell{c[0]})];
    const ErrPerm& hv = h[x.require_index(Cell{c[1]})];
    out.set(e, hv.inverse().after(f.at(e).after(hu)));
  }
  return out;
}

namespace {

struct ShiftScorer {
  const SymCochain& f;
  Rational eta;
  Rational wt_f;
  std::uint64_t evaluated = 0;

  // score = lhs - rhs; positive means a violation
  Rational score(const VertexPerms& h, Rational* lhs = nullptr, Rational* rhs = nullptr) {
    ++evaluated;
    const SymCochain g = coboundary_shift(f, h);
    const Rational l = eta * (wt_f - sym_weight(g));
    const Rational r = sym_distance(f, g);
    if (lhs) *lhs = l;
    if (rhs) *rhs = r;
    return l - r;
  }
};

std::optional<std::uint64_t> enumeration_size(std::uint32_t n, std::size_t vertices, std::uint64_t cap) {
  std::uint64_t fact = 1;
  for (std::uint32_t k = 2; k <= n; ++k) {
    fact *= k;
    if (fact > cap) return std::nullopt;
  }
  std::uint64_t total = 1;
  for (std::size_t v = 0; v < vertices; ++v) {
    if (fact != 0 && total > cap / fact) return std::nullopt;
    total *= fact;
  }
  return total;
}

// h(v) = f(uv) h(u) along a BFS tree, so f^h is the identity on tree edges
// wherever f is total there.
VertexPerms tree_shift(const SymCochain& f) {
  const SimplicialComplex& x = f.complex();
  VertexPerms h(x.size(0), ErrPerm::identity(f.n()));
  std::vector<bool> seen(x.size(0), false);
  for (std::size_t r = 0; r < x.size(0); ++r) {
    if (seen[r]) continue;
    const RootedTree t = spanning_tree(x, x.cell(0, r)[0]);
    for (Vertex v : t.order) {
      const std::size_t vi = x.require_index(Cell{v});
      seen[vi] = true;
      if (v == t.root) continue;
      const Vertex u = t.parent.at(v);
      const ErrPerm& fuv = f.edge(u, v);
      if (fuv.is_total()) h[vi] = fuv.after(h[x.require_index(Cell{u})]);
    }
  }
  return h;
}

ErrPerm transposed(const ErrPerm& p, Point a, Point b) {
  std::vector<Point> im = p.images();
  std::swap(im[a], im[b]);
  return ErrPerm(std::move(im));
}

}  // namespace

MinimalityVerdict eta_minimality_check(const SymCochain& f, const Rational& eta,
                                       const MinimalitySearch& search) {
  if (f.degree() != 1) throw InputError("eta-minimality is defined only for 1-cochains");
  const std::size_t verts = f.complex().size(0);
  const std::uint32_t n = f.n();
  ShiftScorer scorer{f, eta, sym_weight(f)};
  MinimalityVerdict out;
  Rational best_score;
  bool have_best = false;
  auto consider = [&](const VertexPerms& h) {
    Rational l, r;
    const Rational s = scorer.score(h, &l, &r);
    if (!have_best || s > best_score) {
      have_best = true;
      best_score = s;
      out.lhs = l;
      out.rhs = r;
      if (s > 0) {
        out.violation_found = true;
        out.witness = h;
      }
    }
    return s;
  };

  if (auto total = enumeration_size(n, verts, search.exhaustive_limit)) {
    out.exhaustive = true;
    std::vector<std::vector<Point>> perms;
    std::vector<Point> p(n);
    std::iota(p.begin(), p.end(), Point{0});
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::size_t> digit(verts, 0);
    VertexPerms h(verts, ErrPerm(perms[0]));
    for (std::uint64_t step = 0; step < *total; ++step) {
      if (consider(h) > 0) break;
      for (std::size_t v = 0; v < verts; ++v) {
        if (++digit[v] < perms.size()) {
          h[v] = ErrPerm(perms[digit[v]]);
          break;
        }
        digit[v] = 0;
        h[v] = ErrPerm(perms[0]);
      }
    }
    out.evaluated = scorer.evaluated;
    return out;
  }

  SplitMix64 rng(search.seed);
  std::vector<VertexPerms> starts{VertexPerms(verts, ErrPerm::identity(n)), tree_shift(f)};
  for (unsigned r = 0; r < search.restarts; ++r) {
    VertexPerms h;
    for (std::size_t v = 0; v < verts; ++v) h.push_back(ErrPerm(rng.permutation(n)));
    starts.push_back(std::move(h));
  }
  for (VertexPerms h : starts) {
    if (out.violation_found || scorer.evaluated >= search.evaluation_budget) break;
    Rational cur = consider(h);
    bool improved = true;
    while (improved && !out.violation_found && scorer.evaluated < search.evaluation_budget) {
      improved = false;
      for (std::size_t v = 0; v < verts && !improved; ++v)
        for (Point a = 0; a < n && !improved; ++a)
          for (Point b = a + 1; b < n && !improved; ++b) {
            VertexPerms cand = h;
            cand[v] = transposed(h[v], a, b);
            const Rational s = consider(cand);
            if (s > cur) {
              cur = s;
              h = std::move(cand);
              improved = true;
            }
            if (scorer.evaluated >= search.evaluation_budget) break;
          }
    }
  }
  out.evaluated = scorer.evaluated;
  return out;
}

SymCochain localize(const SymCochain& f, const Cell& s) {
  const int j = static_cast<int>(s.size()) - 1;
  if (j < 0 || f.degree() <= j) throw InputError("localization needs a face of dimension below the degree");
  const int k = f.degree() - j - 1;
  auto l = std::make_shared<const SimplicialComplex>(link(f.complex(), s));
  if (l->empty() || l->dim() < k) throw InputError("the link has no cells of the localized degree");
  SymCochain out(l, k, f.n());
  for (std::size_t t = 0; t < l->size(k); ++t) {
    std::vector<Vertex> oriented = s;
    const Cell& tc = l->cell(k, t);
    oriented.insert(oriented.end(), tc.begin(), tc.end());
    out.set(t, f.value(oriented));
  }
  return out;
}

std::vector<LocalMinimalityRow> eta_local_minimality(const SymCochain& f, const Rational& eta,
                                                     const MinimalitySearch& search) {
  const int face_dim = f.degree() - 2;
  if (face_dim < 0) throw InputError("local minimality needs a cochain of degree at least 2");
  std::vector<LocalMinimalityRow> rows;
  for (const Cell& s : f.complex().cells(face_dim)) {
    const SimplicialComplex l = link(f.complex(), s);
    if (l.empty() || l.dim() < 1) continue;
    rows.push_back({s, eta_minimality_check(localize(f, s), eta, search)});
  }
  return rows;
}

}  // namespace sofic

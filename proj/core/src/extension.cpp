#include "sofic/extension.hpp"

#include <algorithm>
#include <deque>

#include "sofic/error.hpp"

namespace sofic {

Presentation extension_from_cocycle(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi) {
  if (phi.k != 2 || !is_cocycle(x, phi)) throw InputError("extension data must be a 2-cocycle");
  Presentation p;
  auto in_component = [&](const Cell& c) { return t.contains(c[0]); };
  for (const auto& e : x.cells(1)) {
    if (!in_component(e)) continue;
    p.add_generator(edge_generator_name(e[0], e[1]));
    p.add_generator(edge_generator_name(e[1], e[0]));
  }
  const std::uint32_t edges = static_cast<std::uint32_t>(p.generator_count());
  const std::uint32_t tau = p.add_generator("tau");
  const Letter tl{tau, false};
  p.add_relation({tl, tl});
  for (std::uint32_t s = 0; s < edges; ++s) p.add_relation({tl, {s, false}, {tau, true}, {s, true}});

  auto gen = [&](Vertex a, Vertex b) { return Letter{p.require(edge_generator_name(a, b)), false}; };
  for (const auto& e : t.edges) {
    p.add_relation({gen(e[0], e[1])});
    p.add_relation({gen(e[1], e[0])});
  }
  for (const auto& e : x.cells(1))
    if (in_component(e)) p.add_relation({gen(e[0], e[1]), gen(e[1], e[0])});
  for (std::size_t i = 0; i < x.size(2); ++i) {
    const Cell& c = x.cell(2, i);
    if (!in_component(c)) continue;
    Word a{gen(c[0], c[1]), gen(c[1], c[2]), gen(c[2], c[0])};
    Word b{gen(c[0], c[2]), gen(c[2], c[1]), gen(c[1], c[0])};
    if (phi.bits.test(i)) {
      a.push_back(tl);
      b.push_back(tl);
    }
    p.add_relation(std::move(a));
    p.add_relation(std::move(b));
  }
  return p;
}

ExtensionDatum make_extension(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi) {
  return ExtensionDatum{fundamental_group_presentation(x, t), extension_from_cocycle(x, t, phi), phi};
}

F2Cochain adjust_section(const SimplicialComplex& x, const F2Cochain& phi, const F2Cochain& psi1) {
  if (phi.k != 2 || psi1.k != 1) throw InputError("adjust_section takes a 2-cochain and a 1-cochain");
  return phi + coboundary(x, psi1);
}

namespace {

// Adds δb to c so that c vanishes on the tree edges; b is built along the
// BFS order, so each tree edge is fixed once.
void gauge_along_tree(const SimplicialComplex& x, const RootedTree& t, F2Cochain& c) {
  std::vector<bool> b(x.vertex_bound(), false);
  for (Vertex v : t.order) {
    if (v == t.root) continue;
    const Vertex u = t.parent.at(v);
    const std::size_t e = x.require_index(Cell{std::min(u, v), std::max(u, v)});
    b[v] = b[u] ^ c.bits.test(e);
  }
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const Cell& edge = x.cell(1, e);
    if (b[edge[0]] != b[edge[1]]) c.bits.flip(e);
  }
}

}  // namespace

AlmostAction random_gauge_action(const SimplicialComplex& x, const RootedTree& t, std::uint32_t fiber,
                                 SplitMix64& rng) {
  if (fiber == 0) throw InputError("fiber must be nonempty");
  const F2Subspace z = cocycle_space(x, 1);
  F2Cochain c = F2Cochain::zero(x, 1);
  for (const auto& row : z.basis.rows)
    if (rng.chance(1, 2)) c.bits ^= row;
  gauge_along_tree(x, t, c);

  std::vector<Point> order = rng.permutation(fiber);
  std::vector<Point> im(fiber);
  for (Point p = 0; p < fiber; ++p) im[p] = p;
  for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
    im[order[i]] = order[i + 1];
    im[order[i + 1]] = order[i];
  }
  const ErrPerm pi(std::move(im));
  const ErrPerm id = ErrPerm::identity(fiber);

  Presentation p = fundamental_group_presentation(x, t);
  std::vector<ErrPerm> images(p.generator_count(), id);
  for (std::size_t e = 0; e < x.size(1); ++e) {
    const Cell& edge = x.cell(1, e);
    if (!t.contains(edge[0])) continue;
    const ErrPerm& img = c.bits.test(e) ? pi : id;
    images[p.require(edge_generator_name(edge[0], edge[1]))] = img;
    images[p.require(edge_generator_name(edge[1], edge[0]))] = img;
  }
  return AlmostAction(std::move(p), std::move(images), fiber);
}

SignedLift lift_to_extension(const SimplicialComplex& x, const RootedTree& t, const F2Cochain& phi,
                             const AlmostAction& f) {
  const Presentation ext = extension_from_cocycle(x, t, phi);
  const Covering cover = build_cover(x, f);
  const SimplicialComplex& y = cover.total();
  const std::uint32_t n = f.universe();

  SignedLift out;
  F2Cochain c = F2Cochain::zero(y, 1);
  const F2Cochain target = pull_back_cocycle(phi, cover);
  const auto comps = y.components();
  for (const auto& comp : comps) {
    const SimplicialComplex yc = y.induced(comp);
    F2Cochain local = F2Cochain::zero(yc, 2);
    for (std::size_t i = 0; i < yc.size(2); ++i)
      if (target.bits.test(y.require_index(yc.cell(2, i)))) local.bits.set(i);
    if (auto sol = solve_coboundary(yc, local)) {
      ++out.exact_components;
      for (std::size_t e = 0; e < yc.size(1); ++e)
        if (sol->bits.test(e)) c.bits.set(y.require_index(yc.cell(1, e)));
    }
  }
  out.components = comps.size();
  out.exact = out.exact_components == out.components;
  {
    // Normalize c to vanish on every lift of a tree edge.
    std::vector<bool> b(y.vertex_bound(), false);
    std::vector<bool> done(y.vertex_bound(), false);
    for (Point s = 0; s < n; ++s) {
      const Vertex root = cover.lift_vertex(t.root, s);
      done[root] = true;
      std::deque<Vertex> queue{root};
      while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : y.neighbors(u)) {
          if (done[w] || !t.has_edge(cover.base_vertex(u), cover.base_vertex(w))) continue;
          done[w] = true;
          const std::size_t e = y.require_index(Cell{std::min(u, w), std::max(u, w)});
          b[w] = b[u] ^ c.bits.test(e);
          queue.push_back(w);
        }
      }
    }
    for (std::size_t e = 0; e < y.size(1); ++e) {
      const Cell& edge = y.cell(1, e);
      if (b[edge[0]] != b[edge[1]]) c.bits.flip(e);
    }
  }

  std::vector<ErrPerm> images(ext.generator_count());
  for (std::size_t xi = 0; xi < x.size(1); ++xi) {
    const Cell& edge = x.cell(1, xi);
    if (!t.contains(edge[0])) continue;
    const ErrPerm& fxy = edge_image(f, edge[0], edge[1]);
    const ErrPerm& fyx = edge_image(f, edge[1], edge[0]);
    std::vector<bool> neg_fwd(n), neg_bwd(n);
    for (Point star = 0; star < n; ++star) {
      // The lift at ⋆ joins (x,⋆) and (y, f(yx).⋆).
      const bool sign = c.bits.test(cover.lift(1, xi, star));
      neg_bwd[star] = sign;
      neg_fwd[fyx(star)] = sign;
    }
    images[ext.require(edge_generator_name(edge[0], edge[1]))] = SignedPerm::lift(fxy, neg_fwd).perm();
    images[ext.require(edge_generator_name(edge[1], edge[0]))] = SignedPerm::lift(fyx, neg_bwd).perm();
  }
  images[ext.require("tau")] = SignedPerm::sign_flip(n).perm();
  out.psi = AlmostAction(ext, std::move(images), 2 * n);
  return out;
}

AlmostAction truncate_signed_action(const AlmostAction& psi, std::uint32_t omega) {
  const std::uint32_t n = psi.universe() / 2;
  if (omega == 0 || omega > n) throw InputError("truncation size must lie in [1, |Σ|]");
  const auto tau = psi.presentation().find("tau");
  std::vector<ErrPerm> images;
  for (std::uint32_t g = 0; g < psi.images().size(); ++g) {
    if (tau && g == *tau) {
      images.push_back(SignedPerm::sign_flip(omega).perm());
      continue;
    }
    const SignedPerm s(psi.image(g));
    if (!s.commutes_with_sign_flip()) throw InputError("truncation needs a sign-commuting action");
    std::vector<Point> bar(omega, kError);
    std::vector<bool> negate(omega, false);
    std::vector<bool> used(omega, false);
    std::vector<Point> loose;
    for (Point p = 0; p < omega; ++p) {
      const Point img = s(plus(p));
      if (base_of(img) < omega) {
        bar[p] = base_of(img);
        negate[p] = is_negative(img);
        used[base_of(img)] = true;
      } else {
        loose.push_back(p);
      }
    }
    std::size_t next = 0;
    for (Point q = 0; q < omega; ++q)
      if (!used[q]) bar[loose[next++]] = q;
    images.push_back(SignedPerm::lift(ErrPerm(std::move(bar)), negate).perm());
  }
  return AlmostAction(psi.presentation(), std::move(images), 2 * omega);
}

AlmostAction inject_noise(const AlmostAction& phi, const Rational& rate, SplitMix64& rng,
                          const std::vector<std::string>& skip) {
  if (rate < 0 || rate > 1) throw InputError("noise rate must lie in [0,1]");
  const std::uint32_t n = phi.universe();
  const Rational target = rate * n;
  const mpz_class scaled = target.get_num() / target.get_den();
  const auto k = static_cast<std::uint32_t>(scaled.get_ui());
  AlmostAction out = phi;
  for (std::uint32_t g = 0; g < phi.images().size(); ++g) {
    const std::string& name = phi.presentation().generator(g);
    if (std::find(skip.begin(), skip.end(), name) != skip.end()) continue;
    std::vector<Point> points = rng.sample(n, k);
    std::vector<Point> targets = points;
    rng.shuffle(std::span<Point>(targets));
    std::vector<Point> pi(n);
    for (Point p = 0; p < n; ++p) pi[p] = p;
    for (std::size_t i = 0; i < points.size(); ++i) pi[points[i]] = targets[i];
    out.set_image(g, ErrPerm(std::move(pi)).after(phi.image(g)));
  }
  return out;
}

}  // namespace sofic

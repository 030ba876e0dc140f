#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sofic/action.hpp"
#include "sofic/complex.hpp"
#include "sofic/rng.hpp"

namespace gen {

using sofic::Cell;
using sofic::SimplicialComplex;
using sofic::SplitMix64;
using sofic::Vertex;

/// Pure connected complex: a strip of consecutive (dim+1)-sets on [0,n)
/// plus `extra` random top faces.
inline SimplicialComplex random_connected(std::uint32_t n, std::uint32_t extra, int dim, SplitMix64& rng) {
  const auto k = static_cast<std::uint32_t>(dim + 1);
  std::set<Cell> faces;
  for (Vertex i = 0; i + k <= n; ++i) {
    Cell c(k);
    for (std::uint32_t j = 0; j < k; ++j) c[j] = i + j;
    faces.insert(c);
  }
  for (std::uint32_t e = 0; e < extra; ++e) {
    Cell c = rng.sample(n, k);
    std::sort(c.begin(), c.end());
    faces.insert(c);
  }
  std::vector<Cell> v(faces.begin(), faces.end());
  return SimplicialComplex::from_top_faces(v);
}

inline std::vector<std::vector<std::uint32_t>> top_faces(const SimplicialComplex& x) {
  return x.cells(x.dim());
}

/// A genuine action of the edge-generator presentation built by
/// propagating the triangle rule f(xz) = f(xy)∘f(yz) from random seeds;
/// nullopt when the random choices clash.
inline std::optional<sofic::AlmostAction> propagated_action(const SimplicialComplex& x, const sofic::RootedTree& t,
                                                            std::uint32_t fiber, SplitMix64& rng) {
  using oracle::Vec;
  std::map<std::pair<Vertex, Vertex>, Vec> f;
  for (const Cell& e : x.cells(1))
    if (t.has_edge(e[0], e[1])) f[{e[0], e[1]}] = oracle::identity(fiber);
  auto known = [&](Vertex a, Vertex b) { return f.count({a, b}) != 0; };
  const auto& tris = x.dim() >= 2 ? x.cells(2) : std::vector<Cell>{};
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (const Cell& tr : tris) {
        const Vertex a = tr[0], b = tr[1], c = tr[2];
        const int k = known(a, b) + known(b, c) + known(a, c);
        if (k != 2) continue;
        if (!known(a, c))
          f[{a, c}] = oracle::compose(f[{a, b}], f[{b, c}]);
        else if (!known(a, b))
          f[{a, b}] = oracle::compose(f[{a, c}], oracle::inverse(f[{b, c}]));
        else
          f[{b, c}] = oracle::compose(oracle::inverse(f[{a, b}]), f[{a, c}]);
        progress = true;
      }
    }
    bool assigned = false;
    for (const Cell& e : x.cells(1))
      if (!known(e[0], e[1])) {
        f[{e[0], e[1]}] = rng.permutation(fiber);
        assigned = true;
        break;
      }
    if (!assigned) break;
  }
  for (const Cell& tr : tris)
    if (f[{tr[0], tr[2]}] != oracle::compose(f[{tr[0], tr[1]}], f[{tr[1], tr[2]}])) return std::nullopt;

  sofic::Presentation p = sofic::fundamental_group_presentation(x, t);
  std::vector<sofic::ErrPerm> images(p.generator_count(), sofic::ErrPerm::identity(fiber));
  for (const auto& [e, v] : f) {
    images[p.require(sofic::edge_generator_name(e.first, e.second))] = sofic::ErrPerm(v);
    images[p.require(sofic::edge_generator_name(e.second, e.first))] = sofic::ErrPerm(oracle::inverse(v));
  }
  return sofic::AlmostAction(std::move(p), std::move(images), fiber);
}

}  // namespace gen

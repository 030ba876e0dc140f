#include "sofic/complex.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "sofic/error.hpp"
#include "sofic/f2.hpp"
#include "sofic/rng.hpp"

namespace sofic {

std::size_t CellHash::operator()(const Cell& c) const noexcept {
  return boost::hash_range(c.begin(), c.end());
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All nonempty subsets of a sorted cell, grouped by size.
void add_closure(const Cell& c, std::vector<std::set<Cell>>& by_dim) {
  const std::size_t n = c.size();
  if (n > 30) throw InputError("cell too large");
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Cell sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(c[i]);
    by_dim[sub.size() - 1].insert(std::move(sub));
  }
}

Cell normalized(Cell c) {
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end())
    throw InputError("cell has repeated vertices");
  return c;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_cells(std::span<const Cell> cells, Vertex vertex_bound) {
  std::size_t top = 0;
  for (const auto& c : cells) top = std::max(top, c.size());
  std::vector<std::set<Cell>> by_dim(top);
  for (const auto& raw : cells) {
    if (raw.empty()) continue;
    Cell c = normalized(raw);
    if (c.back() >= vertex_bound) throw InputError("vertex index out of range");
    add_closure(c, by_dim);
  }
  SimplicialComplex x;
  x.vertex_bound_ = vertex_bound;
  while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
  for (auto& s : by_dim) x.faces_.emplace_back(s.begin(), s.end());
  x.index_all();
  return x;
}

SimplicialComplex SimplicialComplex::from_top_faces(std::span<const Cell> top_faces,
                                                    std::optional<Vertex> vertex_bound) {
  if (top_faces.empty()) throw InputError("no top faces given");
  const std::size_t card = top_faces.front().size();
  Vertex bound = 0;
  for (const auto& f : top_faces) {
    if (f.empty()) throw InputError("empty top face");
    if (f.size() != card)
      throw InputError("top faces have mixed cardinalities; the complex would not be pure");
    bound = std::max(bound, *std::max_element(f.begin(), f.end()) + 1);
  }
  if (vertex_bound) {
    if (*vertex_bound < bound) throw InputError("vertex index out of range");
    bound = *vertex_bound;
  }
  return from_cells(top_faces, bound);
}

void SimplicialComplex::index_all() {
  const int d = dim();
  index_.assign(faces_.size(), {});
  boundary_.assign(faces_.size(), {});
  cofaces_.assign(faces_.size(), {});
  top_count_.assign(faces_.size(), {});
  for (int k = 0; k <= d; ++k) {
    auto& idx = index_[k];
    idx.reserve(faces_[k].size());
    for (std::size_t i = 0; i < faces_[k].size(); ++i) idx.emplace(faces_[k][i], i);
    cofaces_[k].assign(faces_[k].size(), {});
    top_count_[k].assign(faces_[k].size(), 0);
  }
  for (int k = 1; k <= d; ++k) {
    boundary_[k].resize(faces_[k].size());
    for (std::size_t i = 0; i < faces_[k].size(); ++i) {
      const Cell& c = faces_[k][i];
      for (std::size_t j = 0; j < c.size(); ++j) {
        Cell face;
        face.reserve(c.size() - 1);
        for (std::size_t t = 0; t < c.size(); ++t)
          if (t != j) face.push_back(c[t]);
        const std::size_t fi = index_[k - 1].at(face);
        boundary_[k][i].push_back(fi);
        cofaces_[k - 1][fi].push_back(i);
      }
    }
  }
  pure_ = true;
  for (int k = 0; k < d; ++k)
    for (const auto& co : cofaces_[k])
      if (co.empty()) pure_ = false;
  if (d >= 0) {
    // top counts: each top cell contributes to every subset
    for (std::size_t t = 0; t < faces_[d].size(); ++t) {
      const Cell& c = faces_[d][t];
      const std::size_t n = c.size();
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Cell sub;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (1u << i)) sub.push_back(c[i]);
        ++top_count_[sub.size() - 1][index_[sub.size() - 1].at(sub)];
      }
    }
  }
  adjacency_.assign(vertex_bound_, {});
  if (d >= 1) {
    for (const auto& e : faces_[1]) {
      adjacency_[e[0]].push_back(e[1]);
      adjacency_[e[1]].push_back(e[0]);
    }
    for (auto& a : adjacency_) std::sort(a.begin(), a.end());
  }
}

std::size_t SimplicialComplex::size(int k) const {
  if (k < 0 || k > dim()) return 0;
  return faces_[k].size();
}

const std::vector<Cell>& SimplicialComplex::cells(int k) const {
  static const std::vector<Cell> kEmpty;
  if (k < 0 || k > dim()) return kEmpty;
  return faces_[k];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Cell& c) const {
  if (c.empty() || static_cast<int>(c.size()) - 1 > dim()) return std::nullopt;
  const auto& idx = index_[c.size() - 1];
  auto it = idx.find(c);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialComplex::require_index(const Cell& c) const {
  auto i = index_of(c);
  if (!i) {
    std::string s = "{";
    for (auto v : c) s += std::to_string(v) + " ";
    if (s.size() > 1) s.pop_back();
    throw InputError("not a cell of the complex: " + s + "}");
  }
  return *i;
}

const std::vector<Vertex>& SimplicialComplex::neighbors(Vertex v) const {
  if (v >= adjacency_.size()) throw InputError("vertex out of range");
  return adjacency_[v];
}

std::vector<std::vector<Vertex>> SimplicialComplex::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(vertex_bound_, false);
  for (const auto& c : cells(0)) {
    const Vertex start = c[0];
    if (seen[start]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex u : adjacency_[v])
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

SimplicialComplex SimplicialComplex::induced(std::span<const Vertex> vertices) const {
  std::vector<bool> keep(vertex_bound_, false);
  for (Vertex v : vertices) keep.at(v) = true;
  std::vector<Cell> kept;
  for (int k = 0; k <= dim(); ++k)
    for (const auto& c : faces_[k])
      if (std::all_of(c.begin(), c.end(), [&](Vertex v) { return keep[v]; })) kept.push_back(c);
  return from_cells(kept, vertex_bound_);
}

Cell OrientedFace::canonical() const { return normalized(vertices); }

int OrientedFace::parity() const {
  int inversions = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] > vertices[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

OrientedFace OrientedFace::reversed() const {
  return OrientedFace{std::vector<Vertex>(vertices.rbegin(), vertices.rend())};
}

SimplicialComplex build_from_top_faces(const std::vector<std::vector<Vertex>>& top_faces) {
  return SimplicialComplex::from_top_faces(top_faces);
}

WeightScale weight_scale(const SimplicialComplex& x, int k) {
  if (!x.is_pure()) throw InputError("weights are only defined on pure complexes");
  const int d = x.dim();
  if (k < 0 || k > d) throw InputError("dimension out of range for weights");
  WeightScale s;
  s.denominator = binomial(d + 1, k + 1) * x.size(d);
  s.numerators.resize(x.size(k));
  for (std::size_t i = 0; i < x.size(k); ++i) s.numerators[i] = x.top_count(k, i);
  return s;
}

Rational face_weight(const SimplicialComplex& x, int k, std::size_t index) {
  if (!x.is_pure()) throw InputError("weights are only defined on pure complexes");
  const int d = x.dim();
  Rational w(static_cast<unsigned long>(x.top_count(k, index)),
             static_cast<unsigned long>(binomial(d + 1, k + 1) * x.size(d)));
  w.canonicalize();
  return w;
}

Rational face_weight(const SimplicialComplex& x, const Cell& sigma) {
  const std::size_t i = x.require_index(sigma);
  return face_weight(x, static_cast<int>(sigma.size()) - 1, i);
}

SimplicialComplex link(const SimplicialComplex& x, const Cell& s) {
  x.require_index(s);
  std::vector<Cell> out;
  const int k = static_cast<int>(s.size()) - 1;
  // t ∪ s ∈ X with t ∩ s = ∅ means t is s's complement inside a coface of s.
  for (int j = k; j <= x.dim(); ++j) {
    for (const auto& c : x.cells(j)) {
      if (!std::includes(c.begin(), c.end(), s.begin(), s.end())) continue;
      Cell t;
      std::set_difference(c.begin(), c.end(), s.begin(), s.end(), std::back_inserter(t));
      if (!t.empty()) out.push_back(std::move(t));
    }
  }
  return SimplicialComplex::from_cells(out, x.vertex_bound());
}

bool RootedTree::has_edge(Vertex a, Vertex b) const {
  auto ia = parent.find(a);
  auto ib = parent.find(b);
  if (ia == parent.end() || ib == parent.end()) return false;
  return (ia->second == b && a != root) || (ib->second == a && b != root);
}

std::vector<Vertex> RootedTree::path_from_root(Vertex v) const {
  std::vector<Vertex> path;
  if (!contains(v)) throw InputError("vertex not in tree");
  while (v != root) {
    path.push_back(v);
    v = parent.at(v);
  }
  path.push_back(root);
  std::reverse(path.begin(), path.end());
  return path;
}

RootedTree spanning_tree(const SimplicialComplex& x, Vertex root) {
  if (root >= x.vertex_bound() || !x.contains(Cell{root}))
    throw InputError("root " + std::to_string(root) + " is not a vertex of the complex");
  RootedTree t;
  t.root = root;
  t.parent[root] = root;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (Vertex u : x.neighbors(v)) {
      if (t.parent.count(u)) continue;
      t.parent[u] = v;
      t.edges.push_back(v < u ? Cell{v, u} : Cell{u, v});
      queue.push_back(u);
    }
  }
  return t;
}

std::uint32_t Presentation::add_generator(const std::string& name) {
  if (name.empty()) throw InputError("empty generator name");
  if (lookup_.count(name)) throw InputError("duplicate generator '" + name + "'");
  const auto id = static_cast<std::uint32_t>(generators_.size());
  generators_.push_back(name);
  lookup_.emplace(name, id);
  return id;
}

void Presentation::add_relation(Word relation) {
  for (const auto& l : relation)
    if (l.generator >= generators_.size()) throw InputError("relation uses an undeclared generator");
  relations_.push_back(std::move(relation));
}

std::optional<std::uint32_t> Presentation::find(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t Presentation::require(const std::string& name) const {
  auto g = find(name);
  if (!g) throw InputError("unknown generator '" + name + "'");
  return *g;
}

bool Presentation::has_relation(const Word& w) const {
  return std::find(relations_.begin(), relations_.end(), w) != relations_.end();
}

std::size_t Presentation::max_relation_length() const {
  std::size_t l = 0;
  for (const auto& r : relations_) l = std::max(l, r.size());
  return l;
}

Word Presentation::parse_word(const std::string& text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string token = text.substr(pos, end - pos);
    pos = end;
    bool inverse = false;
    if (token.size() > 3 && token.ends_with("^-1")) {
      inverse = true;
      token.resize(token.size() - 3);
    }
    w.push_back(Letter{require(token), inverse});
  }
  return w;
}

std::string Presentation::format_word(const Word& w) const {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += generators_.at(l.generator);
    if (l.inverse) s += "^-1";
  }
  return s;
}

std::string edge_generator_name(Vertex x, Vertex y) {
  return std::to_string(x) + ">" + std::to_string(y);
}

Presentation fundamental_group_presentation(const SimplicialComplex& x, const RootedTree& t) {
  Presentation p;
  auto in_component = [&](const Cell& c) { return t.contains(c[0]); };
  for (const auto& e : x.cells(1)) {
    if (!in_component(e)) continue;
    p.add_generator(edge_generator_name(e[0], e[1]));
    p.add_generator(edge_generator_name(e[1], e[0]));
  }
  auto gen = [&](Vertex a, Vertex b) { return Letter{p.require(edge_generator_name(a, b)), false}; };
  for (const auto& e : t.edges) {
    p.add_relation({gen(e[0], e[1])});
    p.add_relation({gen(e[1], e[0])});
  }
  for (const auto& e : x.cells(1))
    if (in_component(e)) p.add_relation({gen(e[0], e[1]), gen(e[1], e[0])});
  for (const auto& c : x.cells(2)) {
    if (!in_component(c)) continue;
    p.add_relation({gen(c[0], c[1]), gen(c[1], c[2]), gen(c[2], c[0])});
    p.add_relation({gen(c[0], c[2]), gen(c[2], c[1]), gen(c[1], c[0])});
  }
  return p;
}

SimplicialComplex random_lm_complex(Vertex n, double p, std::uint64_t seed) {
  if (n < 3) throw InputError("random complex needs at least 3 vertices");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability must lie in [0,1]");
  SplitMix64 rng(seed);
  // exact threshold on a 64-bit draw; p = 1 always accepts
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  std::vector<Cell> cells;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) cells.push_back({a, b});
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c) {
        const std::uint64_t draw = rng.next();
        const bool take = p >= 1.0 || static_cast<long double>(draw) < scaled;
        if (take) cells.push_back({a, b, c});
      }
  return SimplicialComplex::from_cells(cells, n);
}

std::size_t abelianization_rank_mod2(const Presentation& p) {
  const std::size_t g = p.generator_count();
  std::vector<f2::Bits> rows;
  for (const auto& r : p.relations()) {
    f2::Bits row(g);
    for (const auto& l : r) row.flip(l.generator);
    rows.push_back(std::move(row));
  }
  return g - f2::rank(rows, g);
}

}  // namespace sofic

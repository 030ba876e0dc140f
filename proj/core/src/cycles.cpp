#include "sofic/cycles.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "sofic/error.hpp"

namespace sofic {

namespace {

bool has_edge(const SimplicialComplex& x, Vertex a, Vertex b) {
  return a != b && x.contains(Cell{std::min(a, b), std::max(a, b)});
}

bool has_triangle(const SimplicialComplex& x, Vertex a, Vertex b, Vertex c) {
  if (x.dim() < 2 || a == b || b == c || a == c) return false;
  Cell t{a, b, c};
  std::sort(t.begin(), t.end());
  return x.contains(t);
}

// Third vertices of the triangles on edge ab.
std::vector<Vertex> triangle_apexes(const SimplicialComplex& x, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  if (x.dim() < 2) return out;
  const auto e = x.index_of(Cell{std::min(a, b), std::max(a, b)});
  if (!e) return out;
  for (std::size_t t : x.cofaces(1, *e))
    for (Vertex w : x.cell(2, t))
      if (w != a && w != b) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

void validate_cycle(const SimplicialComplex& x, const Cycle& c) {
  if (c.vertices.empty()) throw InputError("a cycle needs at least one vertex");
  if (c.vertices.front() != c.vertices.back()) throw InputError("cycle is not closed");
  if (!x.contains(Cell{c.vertices.front()})) throw InputError("cycle base is not a vertex of the complex");
  for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
    if (!has_edge(x, c.vertices[i], c.vertices[i + 1]))
      throw InputError("cycle steps along a non-edge " + std::to_string(c.vertices[i]) + " " +
                       std::to_string(c.vertices[i + 1]));
}

ErrPerm evaluate_cycle(const SymCochain& f, const Cycle& c) {
  validate_cycle(f.complex(), c);
  std::vector<Point> im(f.n());
  for (Point j = 0; j < f.n(); ++j) im[j] = path_image(f, c.vertices, j);
  return ErrPerm(std::move(im));
}

std::vector<Point> cycle_domain(const SymCochain& f, const Cycle& c) {
  validate_cycle(f.complex(), c);
  std::vector<Point> out;
  for (Point j = 0; j < f.n(); ++j) {
    bool in = true;
    for (std::size_t i = 0; i + 1 < c.vertices.size() && in; ++i)
      in = f.edge(c.vertices[i], c.vertices[i + 1]).defined(j);
    if (in) out.push_back(j);
  }
  return out;
}

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::EE: return "EE";
    case MoveKind::EC: return "EC";
    case MoveKind::TE: return "TE";
    case MoveKind::TC: return "TC";
  }
  return "?";
}

Cycle relation_step(const SimplicialComplex& x, const Cycle& c, const Move& m) {
  const auto& v = c.vertices;
  const std::size_t p = m.position;
  Cycle out = c;
  auto& o = out.vertices;
  auto fail = [&] {
    throw InputError(std::string(move_name(m.kind)) + " does not apply at position " + std::to_string(p));
  };
  switch (m.kind) {
    case MoveKind::EE:
      if (p >= v.size() || !has_edge(x, v[p], m.w)) fail();
      o.insert(o.begin() + static_cast<std::ptrdiff_t>(p) + 1, {m.w, v[p]});
      break;
    case MoveKind::EC:
      if (p + 2 >= v.size() || v[p] != v[p + 2]) fail();
      o.erase(o.begin() + static_cast<std::ptrdiff_t>(p) + 1, o.begin() + static_cast<std::ptrdiff_t>(p) + 3);
      break;
    case MoveKind::TE:
      if (p + 1 >= v.size() || !has_triangle(x, v[p], m.w, v[p + 1])) fail();
      o.insert(o.begin() + static_cast<std::ptrdiff_t>(p) + 1, m.w);
      break;
    case MoveKind::TC:
      if (p + 2 >= v.size() || !has_triangle(x, v[p], v[p + 1], v[p + 2])) fail();
      o.erase(o.begin() + static_cast<std::ptrdiff_t>(p) + 1);
      break;
  }
  return out;
}

std::vector<Move> applicable_moves(const SimplicialComplex& x, const Cycle& c, std::size_t max_length) {
  const auto& v = c.vertices;
  const std::size_t len = c.length();
  std::vector<Move> out;
  for (std::size_t p = 0; p + 2 < v.size(); ++p) {
    if (v[p] == v[p + 2]) out.push_back({MoveKind::EC, p, 0});
    if (has_triangle(x, v[p], v[p + 1], v[p + 2])) out.push_back({MoveKind::TC, p, 0});
  }
  if (len + 1 <= max_length)
    for (std::size_t p = 0; p + 1 < v.size(); ++p)
      for (Vertex w : triangle_apexes(x, v[p], v[p + 1])) out.push_back({MoveKind::TE, p, w});
  if (len + 2 <= max_length)
    for (std::size_t p = 0; p < v.size(); ++p)
      for (Vertex w : x.neighbors(v[p])) out.push_back({MoveKind::EE, p, w});
  return out;
}

ContractibilityVerdict is_contractible(const SimplicialComplex& x, const Cycle& c, std::size_t max_length,
                                       std::size_t max_states) {
  validate_cycle(x, c);
  ContractibilityVerdict out;
  const Cycle target = Cycle::trivial(c.base());
  struct Parent {
    Cycle from;
    Move move;
  };
  std::map<Cycle, std::optional<Parent>> seen{{c, std::nullopt}};
  std::deque<Cycle> queue{c};
  bool done = c == target;
  while (!queue.empty() && !done) {
    if (seen.size() >= max_states) break;
    const Cycle cur = queue.front();
    queue.pop_front();
    ++out.explored;
    for (const Move& m : applicable_moves(x, cur, max_length)) {
      Cycle next = relation_step(x, cur, m);
      if (seen.count(next)) continue;
      seen.emplace(next, Parent{cur, m});
      if (next == target) {
        done = true;
        break;
      }
      queue.push_back(std::move(next));
    }
  }
  if (!done) {
    out.length_bound_exhausted = queue.empty();
    return out;
  }
  out.found = true;
  Cycle cur = target;
  out.path.push_back(cur);
  while (seen.at(cur)) {
    const Parent& p = *seen.at(cur);
    out.steps.push_back(p.move);
    cur = p.from;
    out.path.push_back(cur);
  }
  std::reverse(out.steps.begin(), out.steps.end());
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

GoodCheckReport good_function_check(const SymCochain& f, std::size_t max_length,
                                    std::size_t max_cycles_per_base) {
  if (f.degree() != 1) throw InputError("the good-function check takes a 1-cochain");
  const SimplicialComplex& x = f.complex();
  GoodCheckReport rep;
  auto values = [&](const Cycle& c) {
    std::vector<Point> im(f.n());
    for (Point j = 0; j < f.n(); ++j) im[j] = path_image(f, c.vertices, j);
    return im;
  };
  for (const Cell& vc : x.cells(0)) {
    std::map<Cycle, std::vector<Point>> seen;
    const Cycle start = Cycle::trivial(vc[0]);
    seen.emplace(start, values(start));
    std::deque<Cycle> queue{start};
    while (!queue.empty()) {
      const Cycle cur = queue.front();
      queue.pop_front();
      const std::vector<Point> cur_val = seen.at(cur);
      ++rep.cycles;
      for (Point j = 0; j < f.n(); ++j)
        if (cur_val[j] != kError && cur_val[j] != j && rep.ok) {
          rep.ok = false;
          rep.counterexample = cur;
          rep.counterexample_index = j;
        }
      for (const Move& m : applicable_moves(x, cur, max_length)) {
        Cycle next = relation_step(x, cur, m);
        auto it = seen.find(next);
        std::vector<Point> next_val = it != seen.end() ? it->second : values(next);
        bool gap = false;
        bool differs = false;
        for (Point j = 0; j < f.n(); ++j) {
          const bool a = cur_val[j] != kError;
          const bool b = next_val[j] != kError;
          if (a != b) gap = true;
          if (a && b && cur_val[j] != next_val[j]) differs = true;
        }
        if (m.kind == MoveKind::EE) {
          ++rep.ee_steps;
          rep.ee_gaps += gap;
        } else {
          ++rep.steps_checked;
          rep.definedness_gaps += gap;
          if (differs) {
            if (rep.step_failures == 0) {
              rep.step_failure_from = cur;
              rep.step_failure_move = m;
            }
            ++rep.step_failures;
            rep.ok = false;
          }
        }
        if (it != seen.end()) continue;
        if (seen.size() >= max_cycles_per_base) {
          rep.budget_hit = true;
          continue;
        }
        seen.emplace(next, std::move(next_val));
        queue.push_back(std::move(next));
      }
    }
  }
  return rep;
}

}  // namespace sofic

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/generators.hpp"
#include "criteria.hpp"
#include "sofic/covering.hpp"
#include "sofic/cycles.hpp"
#include "sofic/experiment.hpp"
#include "sofic/extension.hpp"
#include "sofic/sampler.hpp"
#include "sofic/sym_cochain.hpp"
#include "sofic/sym_correction.hpp"

using namespace sofic;
using oracle::frac;

namespace acceptance {

// ---- 7: covering correctness -----------------------------------------------

namespace {

// Every cell of x containing v, over all dimensions.
std::set<Cell> star(const SimplicialComplex& x, Vertex v) {
  std::set<Cell> s;
  for (int k = 0; k <= x.dim(); ++k)
    for (const Cell& c : x.cells(k))
      if (std::binary_search(c.begin(), c.end(), v)) s.insert(c);
  return s;
}

}  // namespace

Outcome covering_correctness() {
  Outcome out;
  SplitMix64 rng(77);
  std::size_t propagated = 0, lifted_cells = 0;
  for (int run = 0; run < 50; ++run) {
    const auto n = static_cast<std::uint32_t>(4 + rng.below(5));
    const auto x = gen::random_connected(n, static_cast<std::uint32_t>(rng.below(8)), 2, rng);
    const auto t = spanning_tree(x, 0);
    const auto fiber = static_cast<std::uint32_t>(1 + rng.below(4));
    std::optional<AlmostAction> f;
    if (run % 2 == 0) f = gen::propagated_action(x, t, fiber, rng);
    if (f)
      ++propagated;
    else
      f = random_gauge_action(x, t, fiber, rng);
    const std::string tag = " in run " + std::to_string(run);
    if (defect(*f) != 0) {
      out.fail("generated action is not exact" + tag);
      continue;
    }
    const Covering c = build_cover(x, *f);
    const SimplicialComplex& y = c.total();
    for (int k = 0; k <= x.dim(); ++k) {
      if (y.size(k) != fiber * x.size(k)) out.fail("|Y(k)| != |fiber| |X(k)|" + tag);
      for (std::size_t xi = 0; xi < x.size(k); ++xi)
        for (Point s = 0; s < fiber; ++s) {
          const std::size_t yi = c.lift(k, xi, s);
          ++lifted_cells;
          if (c.project(k, yi) != xi) out.fail("lift does not project back" + tag);
          if (face_weight(y, k, yi) != face_weight(x, k, xi) / fiber) out.fail("w_Y != w_X / |fiber|" + tag);
        }
    }
    for (const Cell& yv : y.cells(0)) {
      const auto sy = star(y, yv[0]);
      const auto sx = star(x, c.base_vertex(yv[0]));
      std::set<Cell> image;
      for (const Cell& cell : sy) {
        Cell p;
        for (Vertex v : cell) p.push_back(c.base_vertex(v));
        std::sort(p.begin(), p.end());
        image.insert(p);
      }
      if (image.size() != sy.size() || image != sx) out.fail("star is not mapped bijectively" + tag);
    }
  }
  if (out.pass)
    out.detail = "50 covers (" + std::to_string(propagated) + " from propagated actions), " +
                 std::to_string(lifted_cells) + " lifted cells";
  return out;
}

// ---- 8 and 9: end-to-end inequality ------------------------------------------

namespace {

std::vector<std::map<std::string, std::string>> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::map<std::string, std::string>> rows;
  auto split = [](const std::string& l) {
    std::vector<std::string> cells;
    std::stringstream ss(l);
    for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
    return cells;
  };
  if (std::getline(in, line)) header = split(line);
  while (std::getline(in, line)) {
    const auto cells = split(line);
    std::map<std::string, std::string> row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

void end_to_end(Outcome& inequality, Outcome& identity) {
  ExperimentConfig cfg;
  cfg.seed = 11;
  cfg.fiber = 60;
  const auto rows = suite(cfg, default_epsilons(), 2);
  std::size_t first_type = 0, nontrivial = 0;
  for (const auto& r : rows) {
    const auto& c = r.contradiction;
    const std::string tag = " (" + r.complex + ", seed " + std::to_string(r.seed) + ", noise " + q(r.noise) + ")";
    const Rational bound = c.epsilon + 4 * c.rho;
    if (bound != c.bound()) inequality.fail("reported bound differs from epsilon + 4 rho" + tag);
    if (c.dw_best > bound) inequality.fail("d_w = " + q(c.dw_best) + " > " + q(bound) + tag);
    if (!r.normalization.within_bounds()) inequality.fail("normalization bound fails" + tag);
    if (!r.lift_exact) inequality.fail("no exact lift was found" + tag);
    nontrivial += c.epsilon > 0;
    first_type += c.first_type_triangles;
    if (c.triangle_identity_failures != 0)
      identity.fail(std::to_string(c.triangle_identity_failures) + " first-type triangles fail" + tag);
  }
  if (rows.size() < 20) inequality.fail("only " + std::to_string(rows.size()) + " runs");
  if (first_type == 0) identity.fail("no first-type triangle was checked");

#ifdef SOFIC_CLI_PATH
  const auto csv = std::filesystem::temp_directory_path() / "sofic_acceptance_suite.csv";
  const std::string cmd = std::string(SOFIC_CLI_PATH) + " experiment suite --runs 2 --fiber 60 --seed 11 --csv " +
                          csv.string() + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  if (rc != 0) inequality.fail("cli exited with status " + std::to_string(rc));
  const auto csv_rows = read_csv(csv);
  if (csv_rows.size() != rows.size()) inequality.fail("cli produced " + std::to_string(csv_rows.size()) + " rows");
  for (const auto& row : csv_rows) {
    const Rational dw = parse_rational(row.at("dw"));
    const Rational bound = parse_rational(row.at("epsilon")) + 4 * parse_rational(row.at("rho"));
    if (parse_rational(row.at("bound")) != bound) inequality.fail("cli bound column differs from epsilon + 4 rho");
    if (row.at("holds") != "true" || dw > bound) inequality.fail("cli row does not hold");
  }
  std::filesystem::remove(csv);
#endif

  if (inequality.pass)
    inequality.detail = std::to_string(rows.size()) + " runs, " + std::to_string(nontrivial) +
                        " with positive defect, all d_w <= eps + 4 rho";
  if (identity.pass) identity.detail = std::to_string(first_type) + " first-type triangles, no failures";
}

// ---- 10: deletion ------------------------------------------------------------

namespace {

bool violates(const SymCochain& f, const Cell& tr, Point j) {
  const Vertex a = tr[0], b = tr[1], c = tr[2];
  const Vertex orders[6][3] = {{a, b, c}, {b, c, a}, {c, a, b}, {a, c, b}, {c, b, a}, {b, a, c}};
  for (const auto& o : orders) {
    Point p = f.edge(o[0], o[1])(j);
    if (p != kError) p = f.edge(o[1], o[2])(p);
    if (p != kError) p = f.edge(o[2], o[0])(p);
    if (p != kError && p != j) return true;
  }
  return false;
}

std::size_t violated_pairs(const SymCochain& f) {
  std::size_t count = 0;
  for (const Cell& tr : f.complex().cells(2))
    for (Point j = 0; j < f.n(); ++j) count += violates(f, tr, j);
  return count;
}

}  // namespace

Outcome deletion_algorithm() {
  Outcome out;
  SplitMix64 rng(5);
  std::size_t ee_gaps = 0, ee_steps = 0, steps = 0, deleted = 0, budget = 0;
  for (int run = 0; run < 100; ++run) {
    const auto nv = static_cast<std::uint32_t>(5 + rng.below(4));
    auto x = std::make_shared<const SimplicialComplex>(
        gen::random_connected(nv, static_cast<std::uint32_t>(rng.below(10)), 2, rng));
    if (x->size(2) > 30) continue;
    const auto n = static_cast<std::uint32_t>(2 + rng.below(15));
    VertexPerms h;
    for (std::size_t v = 0; v < x->size(0); ++v) h.emplace_back(rng.permutation(n));
    SymCochain f = sym_coboundary(x, h);
    for (std::size_t e = 0; e < x->size(1); ++e) {
      if (!rng.chance(1, 3)) continue;
      std::vector<Point> im = f.at(e).images();
      if (rng.chance(1, 2))
        std::swap(im[rng.below(n)], im[rng.below(n)]);
      else
        im[rng.below(n)] = kError;
      f.set(e, ErrPerm(im));
    }
    const std::string tag = " in run " + std::to_string(run);
    const auto before = violated_pairs(f);
    const DeletionReport r = global_deletion(f);
    if (r.violated_pairs != before) out.fail("violation count disagrees with oracle" + tag);
    if (violated_pairs(r.f) != 0 || r.remaining_violations != 0) out.fail("violations survive deletion" + tag);
    const Rational cap = r.epsilon * n * static_cast<long>(x->size(2));
    if (Rational(static_cast<unsigned long>(r.deleted.size())) > cap || !r.markov_bound_holds())
      out.fail("deleted " + std::to_string(r.deleted.size()) + " > " + q(cap) + tag);
    deleted += r.deleted.size();
    const GoodCheckReport g = good_function_check(r.f, 8);
    if (g.step_failures != 0) out.fail("an EC/TE/TC step changes a cycle value" + tag);
    steps += g.steps_checked;
    ee_steps += g.ee_steps;
    ee_gaps += g.ee_gaps;
    budget += g.budget_hit;
  }
  if (out.pass)
    out.detail = std::to_string(deleted) + " indices deleted, " + std::to_string(steps) + " EC/TE/TC steps preserved, " +
                 std::to_string(ee_gaps) + "/" + std::to_string(ee_steps) + " EE gaps logged, budget hit in " +
                 std::to_string(budget) + " runs";
  return out;
}

// ---- 11: contractibility -----------------------------------------------------

Outcome contractibility() {
  Outcome out;
  const std::vector<Cell> tri{{0, 1, 2}};
  const auto t = SimplicialComplex::from_top_faces(tri);
  const auto v = is_contractible(t, Cycle{{0, 1, 2, 0}}, 3);
  if (!v.found || v.steps.size() > 3) out.fail("triangle boundary not contracted within 3 steps");

  std::vector<Cell> ring;
  for (Vertex i = 0; i < 6; ++i) ring.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
  const auto hex = SimplicialComplex::from_top_faces(ring);
  const auto h = is_contractible(hex, Cycle{{0, 1, 2, 3, 4, 5, 0}}, 12);
  if (h.found) out.fail("hollow hexagon reported contractible");
  if (!h.length_bound_exhausted) out.fail("hexagon search did not exhaust the length bound");
  if (out.pass)
    out.detail = "triangle in " + std::to_string(v.steps.size()) + " steps; hexagon: length bound 12 exhausted after " +
                 std::to_string(h.explored) + " cycles";
  return out;
}

// ---- 12: sampler -------------------------------------------------------------

Outcome sampler() {
  Outcome out;
  const std::vector<Rational> alphas{0, make_rational(1, 10), make_rational(1, 2)};
  const std::vector<Rational> betas{0, make_rational(1, 2), 1, 2};
  std::size_t checks = 0;
  for (std::uint32_t n = 3; n <= 10; ++n)
    for (std::uint32_t m = 1; m <= 4; ++m)
      for (const auto& a : alphas)
        for (const auto& b : betas) {
          const auto v = sampler_check(SamplerGraph::complete(n, m), a, b);
          ++checks;
          if (!v.pass || !v.exhaustive) out.fail("complete bipartite graph fails or was not enumerated");
        }
  const Rational alpha = make_rational(1, 10);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    const SamplerGraph g(n, {{0}});
    for (const Rational& beta : std::vector<Rational>{Rational(0), Rational(1), Rational(static_cast<unsigned long>(n - 1)),
                                 Rational(Rational(n) - make_rational(1, 2)), Rational(n), Rational(n + 1)}) {
      const auto v = sampler_check(g, alpha, beta);
      ++checks;
      const bool should_fail = beta < n;
      if (v.pass == should_fail) out.fail("single right vertex, n = " + std::to_string(n) + ", beta = " + q(beta));
      if (!v.exhaustive) out.fail("|L| <= 10 was not enumerated exhaustively");
    }
  }
  if (out.pass) out.detail = std::to_string(checks) + " checks, all exhaustive";
  return out;
}

}  // namespace acceptance

// Command-line front end for the sofic library.
//
// Exit codes: 0 success, 1 input error, 2 a checked bound failed.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/covering.hpp"
#include "sofic/cycles.hpp"
#include "sofic/error.hpp"
#include "sofic/experiment.hpp"
#include "sofic/extension.hpp"
#include "sofic/io.hpp"
#include "sofic/repair.hpp"
#include "sofic/sym_cochain.hpp"
#include "sofic/sym_correction.hpp"

namespace fs = std::filesystem;
using namespace sofic;

namespace {

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string csv;
};

Globals g;
int status = 0;

void emit(const CsvTable& t) {
  if (g.csv.empty())
    t.write(std::cout);
  else
    write_file(g.csv, t.str());
}

void require_bound(bool holds, const std::string& what) {
  if (!holds) {
    std::cerr << "bound violated: " << what << "\n";
    status = 2;
  }
}

std::string rational_or_inf(const std::optional<Rational>& q) { return q ? to_fraction_string(*q) : "inf"; }

std::string face_string(const Cell& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
  return s;
}

std::shared_ptr<const SimplicialComplex> shared_complex(const std::string& path) {
  return std::make_shared<const SimplicialComplex>(load_complex(path));
}

Rational parse_rate(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InputError("not a rational number: " + text);
  }
}

// ---- complex ---------------------------------------------------------------

void setup_complex(CLI::App& app) {
  auto* cmd = app.add_subcommand("complex", "Simplicial complexes and weights");
  cmd->require_subcommand(1);

  auto* info = cmd->add_subcommand("info", "Cell counts, purity and components");
  static std::string info_path;
  info->add_option("file", info_path, "Complex file")->required();
  info->callback([] {
    const auto x = load_complex(info_path);
    CsvTable t;
    t.add_column("k");
    t.add_column("cells");
    for (int k = 0; k <= x.dim(); ++k) t.new_row().add(std::to_string(k)).add(x.size(k));
    emit(t);
    std::cerr << "dim " << x.dim() << ", " << (x.is_pure() ? "pure" : "not pure") << ", "
              << x.components().size() << " component(s)\n";
  });

  auto* weights = cmd->add_subcommand("weights", "Normalized face weights of X(k)");
  static std::string w_path;
  static int w_k = 0;
  weights->add_option("file", w_path, "Complex file")->required();
  weights->add_option("-k", w_k, "Dimension")->required();
  weights->callback([] {
    const auto x = load_complex(w_path);
    if (w_k < 0 || w_k > x.dim()) throw InputError("k out of range");
    CsvTable t;
    for (const char* c : {"face", "weight_num", "weight_den", "weight_dec"}) t.add_column(c);
    for (std::size_t i = 0; i < x.size(w_k); ++i) {
      const Rational w = face_weight(x, w_k, i);
      t.new_row().add(face_string(x.cell(w_k, i))).add(w.get_num().get_str()).add(w.get_den().get_str())
          .add(to_decimal_string(w));
    }
    emit(t);
  });

  auto* lm = cmd->add_subcommand("random", "Complete graph plus random triangles");
  static std::uint32_t lm_n = 8;
  static double lm_p = 0.5;
  static std::string lm_out;
  lm->add_option("-n", lm_n, "Vertices")->check(CLI::Range(3u, 4096u));
  lm->add_option("-p", lm_p, "Triangle probability")->check(CLI::Range(0.0, 1.0));
  lm->add_option("-o,--output", lm_out, "Output file (stdout when omitted)");
  lm->callback([] {
    const auto x = random_lm_complex(lm_n, lm_p, g.seed);
    std::ostringstream ss;
    write_complex(ss, x);
    if (lm_out.empty())
      std::cout << ss.str();
    else
      write_file(lm_out, ss.str());
  });

  auto* named = cmd->add_subcommand("standard", "Write a built-in surface triangulation");
  static std::string std_name;
  named->add_option("name", std_name, "rp2, torus, tetrahedron or octahedron")->required();
  named->callback([] { write_complex(std::cout, standard_complex(std_name)); });
}

// ---- cohomology ------------------------------------------------------------

void setup_cohomology(CLI::App& app) {
  auto* cmd = app.add_subcommand("cohomology", "F2 cohomology with weighted norms");
  cmd->require_subcommand(1);
  static std::string path;
  static int k = 0;

  auto* dims = cmd->add_subcommand("dims", "dim C^k, Z^k, B^k, H^k for every k");
  dims->add_option("complex", path, "Complex file")->required();
  dims->callback([] {
    const auto x = load_complex(path);
    CsvTable t;
    for (const char* c : {"k", "cochains", "cocycles", "coboundaries", "cohomology"}) t.add_column(c);
    for (int j = 0; j <= x.dim(); ++j) {
      const auto d = cohomology_dims(x, j);
      t.new_row().add(std::to_string(j)).add(d.cochains).add(d.cocycles).add(d.coboundaries).add(d.cohomology());
    }
    emit(t);
  });

  auto* exp = cmd->add_subcommand("expansion", "Cocycle expansion constant in degree k");
  exp->add_option("complex", path, "Complex file")->required();
  exp->add_option("-k", k, "Degree")->required();
  exp->callback([] {
    const auto x = load_complex(path);
    const auto e = cocycle_expansion_constant(x, k);
    CsvTable t;
    for (const char* c : {"k", "expansion", "expansion_dec"}) t.add_column(c);
    t.new_row().add(std::to_string(k)).add(rational_or_inf(e.value)).add(e.value ? to_decimal_string(*e.value) : "inf");
    emit(t);
  });

  auto* cos = cmd->add_subcommand("cosystole", "Weighted cosystole in degree k");
  cos->add_option("complex", path, "Complex file")->required();
  cos->add_option("-k", k, "Degree")->required();
  cos->callback([] {
    const auto x = load_complex(path);
    const auto c = cosystole(x, k);
    CsvTable t;
    for (const char* h : {"k", "cosystole", "cosystole_dec"}) t.add_column(h);
    t.new_row().add(std::to_string(k)).add(c.value ? to_fraction_string(*c.value) : "none")
        .add(c.value ? to_decimal_string(*c.value) : "none");
    emit(t);
  });

  auto* dist = cmd->add_subcommand("distance", "Weighted distance of a cochain to Z^k and B^k");
  static std::string cochain_path;
  dist->add_option("complex", path, "Complex file")->required();
  dist->add_option("cochain", cochain_path, "Cochain file")->required();
  dist->callback([] {
    const auto x = load_complex(path);
    const auto a = load_cochain(cochain_path, x);
    CsvTable t;
    t.add_column("subspace");
    t.add_rational_column("distance");
    t.add_column("exact");
    const auto z = distance_to_subspace(x, a, cocycle_space(x, a.k));
    const auto b = distance_to_subspace(x, a, coboundary_space(x, a.k));
    t.new_row().add("cocycles").add(z.value).add(z.exact);
    t.new_row().add("coboundaries").add(b.value).add(b.exact);
    emit(t);
  });
}

// ---- action ----------------------------------------------------------------

void setup_action(CLI::App& app) {
  auto* cmd = app.add_subcommand("action", "Almost-actions of finite presentations");
  cmd->require_subcommand(1);
  static std::string pres_path, action_path;

  auto* def = cmd->add_subcommand("defect", "Per-relation defect");
  def->add_option("presentation", pres_path, "Presentation file")->required();
  def->add_option("action", action_path, "Action file")->required();
  def->callback([] {
    const auto p = load_presentation(pres_path);
    const auto a = load_action(action_path, p);
    CsvTable t;
    t.add_column("relation");
    t.add_rational_column("defect");
    for (const auto& r : p.relations()) t.new_row().add(p.format_word(r)).add(relation_defect(a, r));
    t.new_row().add("max").add(defect(a));
    emit(t);
  });

  auto* rep = cmd->add_subcommand("repair", "Normalize so that tau = -Id and commutes with everything");
  static std::string report_path, out_path, tau = "tau";
  rep->add_option("presentation", pres_path, "Presentation file")->required();
  rep->add_option("action", action_path, "Action file")->required();
  rep->add_option("--tau", tau, "Name of the central generator");
  rep->add_option("--report", report_path, "Per-stage CSV");
  rep->add_option("-o,--output", out_path, "Normalized action file");
  rep->callback([] {
    const auto p = load_presentation(pres_path);
    const auto a = load_action(action_path, p);
    const auto n = normalize_sofic_approx(a, tau, g.threads);
    const auto& r = n.report;
    CsvTable t;
    t.add_column("stage");
    t.add_column("quantity");
    t.add_rational_column("value");
    t.add_rational_column("bound");
    t.add_column("holds");
    t.new_row().add("input").add("defect").add(r.epsilon).add(r.epsilon).add(true);
    t.new_row().add("involution").add("defect").add(r.defect_f).add(r.stage1_bound()).add(r.defect_f <= r.stage1_bound());
    t.new_row().add("fixed_point_free").add("distance").add(r.d2).add(r.stage2_distance_bound())
        .add(r.d2 <= r.stage2_distance_bound());
    t.new_row().add("fixed_point_free").add("defect").add(r.defect_g).add(r.stage2_defect_bound())
        .add(r.defect_g <= r.stage2_defect_bound());
    t.new_row().add("sign_commuting").add("defect").add(r.defect_out).add(r.final_bound())
        .add(r.defect_out <= r.final_bound());
    if (!report_path.empty())
      write_file(report_path, t.str());
    else
      emit(t);
    if (!out_path.empty()) {
      std::ostringstream ss;
      write_presentation(ss, n.action.presentation());
      write_file(fs::path(out_path).replace_extension(".pres"), ss.str());
      std::ostringstream as;
      write_action(as, n.action);
      write_file(out_path, as.str());
    }
    require_bound(r.within_bounds(), "normalization stage bounds");
  });

  auto* sep = cmd->add_subcommand("separation", "Smallest d_H(phi(w), Id) over reduced words by length");
  static std::size_t max_len = 4, budget = 100000;
  sep->add_option("presentation", pres_path, "Presentation file")->required();
  sep->add_option("action", action_path, "Action file")->required();
  sep->add_option("-L", max_len, "Maximal word length");
  sep->add_option("--budget", budget, "Maximal number of words");
  sep->callback([] {
    const auto p = load_presentation(pres_path);
    const auto a = load_action(action_path, p);
    CsvTable t;
    t.add_column("length");
    t.add_column("words");
    t.add_rational_column("min_distance");
    t.add_column("argmin");
    for (const auto& row : separation_profile(a, max_len, budget))
      t.new_row().add(row.length).add(row.words).add(row.min_distance).add(p.format_word(row.argmin));
    emit(t);
  });
}

// ---- cover -----------------------------------------------------------------

void setup_cover(CLI::App& app) {
  auto* cmd = app.add_subcommand("cover", "Covering spaces and the sign-cochain experiment");
  cmd->require_subcommand(1);
  static std::string complex_path, action_path, out_path;

  auto* build = cmd->add_subcommand("build", "Covering complex of a genuine action");
  build->add_option("complex", complex_path, "Complex file")->required();
  build->add_option("action", action_path, "Action of the edge-generator presentation")->required();
  build->add_option("-o,--output", out_path, "Covering complex file")->required();
  build->callback([] {
    const auto x = load_complex(complex_path);
    const auto t = spanning_tree(x, x.cell(0, 0)[0]);
    const auto f = load_action(action_path, fundamental_group_presentation(x, t));
    const Covering c = build_cover(x, f);
    std::ostringstream ss;
    write_complex(ss, c.total());
    write_file(out_path, ss.str());
    CsvTable tab;
    for (const char* h : {"k", "base_cells", "cover_cells", "expected"}) tab.add_column(h);
    bool sizes_ok = true;
    for (int k = 0; k <= x.dim(); ++k) {
      const std::size_t expected = x.size(k) * c.fiber_size();
      sizes_ok = sizes_ok && c.total().size(k) == expected;
      tab.new_row().add(std::to_string(k)).add(x.size(k)).add(c.total().size(k)).add(expected);
    }
    emit(tab);
    require_bound(sizes_ok, "|Y(k)| = |fiber| |X(k)|");
    require_bound(c.star_bijective(), "star bijectivity");
  });

  auto* exp = cmd->add_subcommand("experiment", "Distance of the pulled-back cocycle to the sign coboundary");
  static std::string phi_path, psi_path, f_path;
  exp->add_option("complex", complex_path, "Complex file")->required();
  exp->add_option("phi", phi_path, "2-cocycle file")->required();
  exp->add_option("psi", psi_path, "Signed action of the extension presentation")->required();
  exp->add_option("f", f_path, "Genuine action of the edge-generator presentation")->required();
  exp->callback([] {
    const auto x = load_complex(complex_path);
    const auto t = spanning_tree(x, x.cell(0, 0)[0]);
    const auto phi = load_cochain(phi_path, x);
    const auto psi = load_action(psi_path, extension_from_cocycle(x, t, phi));
    const auto f = load_action(f_path, fundamental_group_presentation(x, t));
    const auto r = contradiction_experiment(x, phi, psi, f);
    CsvTable tab;
    for (const char* h : {"epsilon", "rho", "event1", "event2", "dw", "bound"}) tab.add_rational_column(h);
    tab.add_column("component");
    tab.add_column("holds");
    const Rational b = r.bound();
    for (const auto& c : r.components)
      tab.new_row().add(r.epsilon).add(r.rho).add(r.event1).add(r.event2).add(c.dw).add(b)
          .add(c.component).add(c.dw <= b);
    tab.new_row().add(r.epsilon).add(r.rho).add(r.event1).add(r.event2).add(r.dw_best).add(b).add("best")
        .add(r.holds());
    emit(tab);
    require_bound(r.triangle_identity_failures == 0, "sign identity on first-type triangles");
    require_bound(r.holds(), "d_w <= epsilon + 4 rho on the best component");
  });
}

// ---- sym -------------------------------------------------------------------

void write_sym(const SymCochain& f, const std::string& path) {
  std::ostringstream ss;
  write_sym_cochain(ss, f);
  write_file(path, ss.str());
}

void setup_sym(CLI::App& app) {
  auto* cmd = app.add_subcommand("sym", "Sym-valued cochains: coboundary weight, correction, deletion");
  cmd->require_subcommand(1);
  static std::string complex_path, f_path, out_path;

  auto* delta = cmd->add_subcommand("delta", "Weight of the coboundary");
  static bool strict = false, lenient = false;
  delta->add_option("complex", complex_path, "Complex file")->required();
  delta->add_option("f", f_path, "Sym cochain file")->required();
  auto* s_flag = delta->add_flag("--strict", strict, "Undefined composites count as violations");
  delta->add_flag("--lenient", lenient, "Skip undefined composites (default)")->excludes(s_flag);
  delta->callback([] {
    const auto f = load_sym_cochain(f_path, shared_complex(complex_path));
    const auto w = sym_delta_weight(f, strict ? Strictness::strict : Strictness::lenient);
    CsvTable t;
    t.add_column("mode");
    t.add_rational_column("plain");
    t.add_rational_column("robust");
    t.add_rational_column("weight");
    t.new_row().add(strict ? "strict" : "lenient").add(w.plain).add(w.robust).add(sym_weight(f));
    emit(t);
  });

  auto* edge = cmd->add_subcommand("correct-edge", "Majority-vote correction of one edge");
  static Vertex u = 0, v = 0;
  static std::string eta1 = "2/3";
  edge->add_option("f", f_path, "Sym cochain file")->required();
  edge->add_option("u", u, "First endpoint")->required();
  edge->add_option("v", v, "Second endpoint")->required();
  edge->add_option("--eta1", eta1, "Vote threshold in (1/2, 1]");
  edge->add_option("-o,--output", out_path, "Corrected cochain file");
  edge->callback([] {
    const auto f = load_sym_cochain(f_path);
    const auto r = single_edge_correction(f, u, v, parse_rate(eta1));
    CsvTable t;
    for (const char* h : {"index", "action", "target"}) t.add_column(h);
    for (Point i = 0; i < r.actions.size(); ++i) {
      const char* a = r.actions[i] == IndexAction::assigned ? "assigned"
                      : r.actions[i] == IndexAction::deleted ? "deleted" : "unchanged";
      t.new_row().add(std::to_string(i)).add(a)
          .add(r.assigned_to[i] == kError ? std::string("-") : std::to_string(r.assigned_to[i]));
    }
    emit(t);
    if (!r.warning.empty()) std::cerr << "warning: " << r.warning << "\n";
    if (!out_path.empty()) write_sym(r.f, out_path);
  });

  auto* del = cmd->add_subcommand("delete", "Delete every index that violates a triangle");
  del->add_option("f", f_path, "Sym cochain file")->required();
  del->add_option("-o,--output", out_path, "Cochain after deletion");
  del->callback([] {
    const auto f = load_sym_cochain(f_path);
    const auto r = global_deletion(f);
    CsvTable t;
    for (const char* h : {"deleted", "violated_pairs", "total_pairs"}) t.add_column(h);
    t.add_rational_column("epsilon");
    t.add_column("remaining_violations");
    t.add_column("holds");
    t.new_row().add(r.deleted.size()).add(r.violated_pairs).add(r.total_pairs).add(r.epsilon)
        .add(r.remaining_violations).add(r.markov_bound_holds() && r.remaining_violations == 0);
    emit(t);
    require_bound(r.markov_bound_holds(), "deleted <= epsilon n |X(2)|");
    require_bound(r.remaining_violations == 0, "no violations after deletion");
    if (!out_path.empty()) write_sym(r.f, out_path);
  });

  auto* good = cmd->add_subcommand("good-check", "Check f(C) on contractible cycles up to length L");
  static std::size_t len = 6, per_base = 300;
  good->add_option("f", f_path, "Sym cochain file")->required();
  good->add_option("-L", len, "Maximal cycle length");
  good->add_option("--max-cycles", per_base, "Cycles enumerated per base vertex");
  good->callback([] {
    const auto f = load_sym_cochain(f_path);
    const auto r = good_function_check(f, len, per_base);
    CsvTable t;
    for (const char* h : {"ok", "cycles", "steps_checked", "step_failures", "definedness_gaps", "ee_steps",
                          "ee_gaps", "budget_hit", "counterexample"})
      t.add_column(h);
    std::string ce = "-";
    if (r.counterexample) {
      ce.clear();
      for (Vertex w : r.counterexample->vertices) ce += (ce.empty() ? "" : " ") + std::to_string(w);
      ce += " @" + std::to_string(r.counterexample_index);
    }
    t.new_row().add(r.ok).add(r.cycles).add(r.steps_checked).add(r.step_failures).add(r.definedness_gaps)
        .add(r.ee_steps).add(r.ee_gaps).add(r.budget_hit).add(ce);
    emit(t);
  });

  auto* min = cmd->add_subcommand("minimality", "Search for a shift that breaks eta-minimality");
  static std::string eta = "1/2";
  min->add_option("f", f_path, "Sym cochain file")->required();
  min->add_option("--eta", eta, "eta");
  min->callback([] {
    const auto f = load_sym_cochain(f_path);
    MinimalitySearch s;
    s.seed = g.seed;
    const auto r = eta_minimality_check(f, parse_rate(eta), s);
    CsvTable t;
    t.add_column("violation_found");
    t.add_rational_column("lhs");
    t.add_rational_column("rhs");
    t.add_column("exhaustive");
    t.add_column("evaluated");
    t.new_row().add(r.violation_found).add(r.lhs).add(r.rhs).add(r.exhaustive).add(std::to_string(r.evaluated));
    emit(t);
  });
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::string complex_name = "rp2";
  std::string complex_path, phi_path, action_path;
  std::string epsilon = "0";
  std::vector<std::string> epsilons;
  std::uint32_t fiber = 100;
  std::uint32_t omega = 0;
  std::uint32_t runs = 1;
  bool one_generator = false;

  ExperimentConfig config() const {
    ExperimentConfig c;
    c.seed = g.seed;
    c.threads = g.threads;
    c.epsilon = parse_rate(epsilon);
    c.complex_name = complex_name;
    if (!complex_path.empty()) c.complex_path = complex_path;
    if (!phi_path.empty()) c.phi_path = phi_path;
    if (!action_path.empty()) c.action_path = action_path;
    c.fiber = fiber;
    c.omega = omega;
    c.noise_target = one_generator ? NoiseTarget::one_generator : NoiseTarget::all_generators;
    if (!g.csv.empty()) c.output = g.csv;
    return c;
  }

  std::vector<Rational> epsilon_list() const {
    if (epsilons.empty()) return default_epsilons();
    std::vector<Rational> out;
    for (const auto& e : epsilons) out.push_back(parse_rate(e));
    return out;
  }
};

void add_common(CLI::App* cmd, ExperimentArgs& a) {
  cmd->add_option("--fiber", a.fiber, "Size of the random gauge action")->check(CLI::Range(1u, 100000u));
  cmd->add_option("--omega", a.omega, "Truncate the signed lift to this many points (0 keeps all)");
  cmd->add_flag("--one-generator", a.one_generator, "Noise on a single generator");
}

void report_runs(const std::vector<RunReport>& rows) {
  emit(run_report_table(rows));
  for (const auto& r : rows) {
    require_bound(r.contradiction.triangle_identity_failures == 0,
                  r.complex + " seed " + std::to_string(r.seed) + ": sign identity");
    require_bound(r.holds(), r.complex + " seed " + std::to_string(r.seed) + " noise " + to_fraction_string(r.noise));
  }
}

void setup_experiment(CLI::App& app) {
  auto* cmd = app.add_subcommand("experiment", "Seeded end-to-end runs on synthetic inputs");
  cmd->require_subcommand(1);
  static ExperimentArgs a;

  auto* run = cmd->add_subcommand("run", "One pipeline run");
  run->add_option("--complex", a.complex_name, "Built-in complex name");
  run->add_option("--complex-file", a.complex_path, "Complex file");
  run->add_option("--phi", a.phi_path, "2-cocycle file");
  run->add_option("--action", a.action_path, "Genuine action file");
  run->add_option("--epsilon", a.epsilon, "Noise rate");
  add_common(run, a);
  run->callback([] { report_runs({run_pipeline(a.config())}); });

  auto* sw = cmd->add_subcommand("sweep", "One run per noise rate and seed");
  sw->add_option("--complex", a.complex_name, "Built-in complex name");
  sw->add_option("--complex-file", a.complex_path, "Complex file");
  sw->add_option("--phi", a.phi_path, "2-cocycle file");
  sw->add_option("--action", a.action_path, "Genuine action file");
  sw->add_option("--epsilons", a.epsilons, "Noise rates")->delimiter(',');
  sw->add_option("--runs", a.runs, "Seeds per noise rate");
  add_common(sw, a);
  sw->callback([] { report_runs(sweep(a.config(), a.epsilon_list(), a.runs)); });

  auto* su = cmd->add_subcommand("suite", "Sweep over every built-in complex");
  su->add_option("--epsilons", a.epsilons, "Noise rates")->delimiter(',');
  su->add_option("--runs", a.runs, "Seeds per noise rate");
  add_common(su, a);
  su->callback([] { report_runs(suite(a.config(), a.epsilon_list(), a.runs)); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted F2 cohomology, almost-actions and covering experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", g.seed, "Seed for every random choice");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--csv", g.csv, "Write the CSV report here instead of stdout");
  setup_complex(app);
  setup_cohomology(app);
  setup_action(app);
  setup_cover(app);
  setup_sym(app);
  setup_experiment(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const BoundViolation& e) {
    std::cerr << "bound violated: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return status;
}

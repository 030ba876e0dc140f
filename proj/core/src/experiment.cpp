#include "sofic/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "sofic/error.hpp"
#include "sofic/extension.hpp"
#include "sofic/rng.hpp"

namespace sofic {

const std::vector<std::string>& standard_complex_names() {
  static const std::vector<std::string> names{"rp2", "torus", "tetrahedron", "octahedron"};
  return names;
}

SimplicialComplex standard_complex(const std::string& name) {
  std::vector<Cell> faces;
  if (name == "rp2") {
    faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
             {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
  } else if (name == "torus") {
    for (Vertex i = 0; i < 7; ++i) {
      faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
      faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
  } else if (name == "tetrahedron") {
    faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  } else if (name == "octahedron") {
    for (Vertex a : {0u, 1u})
      for (Vertex b : {2u, 3u})
        for (Vertex c : {4u, 5u}) faces.push_back({a, b, c});
  } else {
    throw InputError("unknown complex '" + name + "'");
  }
  for (auto& f : faces) std::sort(f.begin(), f.end());
  return SimplicialComplex::from_top_faces(faces);
}

AlmostAction noise_injector(const AlmostAction& action, const Rational& epsilon, std::uint64_t seed,
                            const std::vector<std::string>& skip) {
  SplitMix64 rng(seed);
  return inject_noise(action, epsilon, rng, skip);
}

F2Cochain default_cocycle(const SimplicialComplex& x) {
  if (x.dim() != 2) return F2Cochain::zero(x, 2);
  if (cohomology_dims(x, 1).cohomology() == 0) return coboundary(x, F2Cochain::indicator(x, x.cell(1, 0)));
  return F2Cochain::indicator(x, x.cell(2, 0));
}

namespace {

template <class Fn>
auto stage(const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  }
}

}  // namespace

RunReport run_pipeline(const ExperimentConfig& cfg) {
  RunReport rep;
  rep.seed = cfg.seed;
  rep.noise = cfg.epsilon;
  rep.complex = cfg.complex_path ? cfg.complex_path->filename().string() : cfg.complex_name;

  const SimplicialComplex x = stage("load complex", [&] {
    return cfg.complex_path ? load_complex(*cfg.complex_path) : standard_complex(cfg.complex_name);
  });
  if (x.dim() < 2 || !x.is_pure()) throw InputError("load complex: need a pure complex of dimension at least 2");
  const RootedTree t = spanning_tree(x, x.cell(0, 0)[0]);
  const F2Cochain phi = stage("load cocycle", [&] {
    if (cfg.phi_path) return load_cochain(*cfg.phi_path, x);
    return default_cocycle(x);
  });
  const Presentation base = fundamental_group_presentation(x, t);

  SplitMix64 rng(cfg.seed);
  AlmostAction f;
  SignedLift lift;
  if (cfg.action_path) {
    f = stage("load action", [&] { return load_action(*cfg.action_path, base); });
    lift = stage("signed lift", [&] { return lift_to_extension(x, t, phi, f); });
    rep.gauge_draws = 0;
  } else {
    // Redraw until the lift is exact: a cover on which φ stays nontrivial
    // admits no good signed action to perturb.
    for (rep.gauge_draws = 1;; ++rep.gauge_draws) {
      f = stage("gauge action", [&] { return random_gauge_action(x, t, cfg.fiber, rng); });
      lift = stage("signed lift", [&] { return lift_to_extension(x, t, phi, f); });
      if (lift.exact || rep.gauge_draws == kMaxGaugeDraws) break;
    }
  }
  rep.lift_exact = lift.exact;
  AlmostAction psi = lift.psi;
  if (cfg.omega != 0 && cfg.omega < f.universe())
    psi = stage("truncate", [&] { return truncate_signed_action(psi, cfg.omega); });

  std::vector<std::string> skip{"tau"};
  if (cfg.noise_target == NoiseTarget::one_generator)
    for (const auto& g : psi.presentation().generators())
      if (g != "tau" && g != psi.presentation().generator(0)) skip.push_back(g);
  const std::uint64_t noise_seed = rng.next();
  const AlmostAction noised = stage("noise", [&] { return noise_injector(psi, cfg.epsilon, noise_seed, skip); });
  rep.realized_noise = action_distance(psi, noised);

  const Normalization norm = stage("normalize", [&] { return normalize_sofic_approx(noised, "tau", cfg.threads); });
  rep.normalization = norm.report;
  rep.contradiction = stage("contradiction", [&] { return contradiction_experiment(x, phi, norm.action, f); });
  return rep;
}

namespace {

std::vector<RunReport> run_jobs(const std::vector<ExperimentConfig>& jobs, unsigned threads) {
  std::vector<RunReport> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        out[i] = run_pipeline(jobs[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

void add_jobs(std::vector<ExperimentConfig>& jobs, ExperimentConfig cfg, const std::vector<Rational>& epsilons,
              std::uint32_t runs) {
  const std::uint64_t seed0 = cfg.seed;
  cfg.threads = 1;
  for (const auto& e : epsilons)
    for (std::uint32_t r = 0; r < runs; ++r) {
      cfg.epsilon = e;
      cfg.seed = seed0 + r;
      jobs.push_back(cfg);
    }
}

}  // namespace

std::vector<RunReport> sweep(const ExperimentConfig& config, const std::vector<Rational>& epsilons,
                             std::uint32_t runs_per_epsilon) {
  std::vector<Rational> sorted = epsilons;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ExperimentConfig> jobs;
  add_jobs(jobs, config, sorted, runs_per_epsilon);
  return run_jobs(jobs, config.threads);
}

std::vector<RunReport> suite(const ExperimentConfig& config, const std::vector<Rational>& epsilons,
                             std::uint32_t runs_per_epsilon) {
  std::vector<Rational> sorted = epsilons;
  std::sort(sorted.begin(), sorted.end());
  std::vector<ExperimentConfig> jobs;
  for (const auto& name : standard_complex_names()) {
    ExperimentConfig cfg = config;
    cfg.complex_name = name;
    cfg.complex_path.reset();
    cfg.phi_path.reset();
    cfg.action_path.reset();
    add_jobs(jobs, cfg, sorted, runs_per_epsilon);
  }
  return run_jobs(jobs, config.threads);
}

CsvTable run_report_table(const std::vector<RunReport>& rows) {
  CsvTable t;
  t.add_column("complex");
  t.add_column("seed");
  t.add_rational_column("noise");
  t.add_rational_column("realized_noise");
  t.add_column("gauge_draws");
  t.add_column("lift_exact");
  t.add_rational_column("input_defect");
  t.add_rational_column("epsilon_prime");
  t.add_rational_column("d1");
  t.add_rational_column("d2");
  t.add_rational_column("d3");
  t.add_rational_column("defect_out");
  t.add_rational_column("normalization_bound");
  t.add_column("normalization_holds");
  t.add_rational_column("epsilon");
  t.add_rational_column("rho");
  t.add_rational_column("event1");
  t.add_rational_column("event2");
  t.add_rational_column("dw");
  t.add_rational_column("dw_total");
  t.add_rational_column("bound");
  t.add_column("first_type_triangles");
  t.add_column("identity_failures");
  t.add_column("holds");
  for (const auto& r : rows) {
    const auto& n = r.normalization;
    const auto& c = r.contradiction;
    t.new_row()
        .add(r.complex)
        .add(std::to_string(r.seed))
        .add(r.noise)
        .add(r.realized_noise)
        .add(std::to_string(r.gauge_draws))
        .add(r.lift_exact)
        .add(n.epsilon)
        .add(n.epsilon_prime)
        .add(n.d1)
        .add(n.d2)
        .add(n.d3)
        .add(n.defect_out)
        .add(n.final_bound())
        .add(n.within_bounds())
        .add(c.epsilon)
        .add(c.rho)
        .add(c.event1)
        .add(c.event2)
        .add(c.dw_best)
        .add(c.dw_total)
        .add(c.bound())
        .add(c.first_type_triangles)
        .add(c.triangle_identity_failures)
        .add(r.holds());
  }
  return t;
}

std::vector<Rational> default_epsilons() {
  return {make_rational(0), make_rational(1, 100), make_rational(1, 50), make_rational(1, 20),
          make_rational(1, 10)};
}

}  // namespace sofic

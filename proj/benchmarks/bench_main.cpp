#include <benchmark/benchmark.h>

#include <memory>

#include "sofic/cohomology.hpp"
#include "sofic/complex.hpp"
#include "sofic/experiment.hpp"
#include "sofic/perm.hpp"
#include "sofic/rng.hpp"
#include "sofic/sampler.hpp"
#include "sofic/sym_cochain.hpp"
#include "sofic/sym_correction.hpp"

namespace {

using namespace sofic;

void BM_Compose(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  SplitMix64 rng(1);
  const ErrPerm a(rng.permutation(n)), b(rng.permutation(n));
  for (auto _ : state) benchmark::DoNotOptimize(a.after(b));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Compose)->RangeMultiplier(8)->Range(64, 1 << 15)->Complexity();

void BM_FixToInvolution(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  SplitMix64 rng(2);
  const ErrPerm z(rng.permutation(n));
  for (auto _ : state) benchmark::DoNotOptimize(fix_to_involution(z));
}
BENCHMARK(BM_FixToInvolution)->RangeMultiplier(8)->Range(64, 1 << 15);

void BM_CohomologyDims(benchmark::State& state) {
  const auto x = random_lm_complex(static_cast<Vertex>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_dims(x, 1));
}
BENCHMARK(BM_CohomologyDims)->Arg(10)->Arg(16)->Arg(24);

void BM_Cosystole(benchmark::State& state) {
  const auto x = standard_complex("rp2");
  for (auto _ : state) benchmark::DoNotOptimize(cosystole(x, 1));
}
BENCHMARK(BM_Cosystole);

void BM_GlobalDeletion(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  auto x = std::make_shared<const SimplicialComplex>(standard_complex("torus"));
  SplitMix64 rng(3);
  VertexPerms h;
  for (std::size_t v = 0; v < x->cells(0).size(); ++v) h.emplace_back(rng.permutation(n));
  SymCochain f = sym_coboundary(x, h);
  for (std::size_t e = 0; e < x->cells(1).size(); e += 3) f.set(e, ErrPerm(rng.permutation(n)));
  for (auto _ : state) benchmark::DoNotOptimize(global_deletion(f));
}
BENCHMARK(BM_GlobalDeletion)->Arg(8)->Arg(32)->Arg(128);

void BM_SamplerCheck(benchmark::State& state) {
  const auto g = SamplerGraph::complete(static_cast<std::uint32_t>(state.range(0)), 3);
  const Rational alpha(1, 10), beta(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(sampler_check(g, alpha, beta));
}
BENCHMARK(BM_SamplerCheck)->Arg(8)->Arg(12)->Arg(16);

void BM_Pipeline(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.fiber = static_cast<std::uint32_t>(state.range(0));
  cfg.epsilon = Rational(1, 20);
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(cfg));
}
BENCHMARK(BM_Pipeline)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

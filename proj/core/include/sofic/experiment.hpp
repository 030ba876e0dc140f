#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sofic/action.hpp"
#include "sofic/complex.hpp"
#include "sofic/covering.hpp"
#include "sofic/io.hpp"
#include "sofic/rational.hpp"
#include "sofic/repair.hpp"

namespace sofic {

/// Closed triangulated surfaces used by the synthetic suite: "rp2" (6
/// vertices), "torus" (7 vertices), "tetrahedron" (boundary of the
/// 3-simplex) and "octahedron".
const std::vector<std::string>& standard_complex_names();
SimplicialComplex standard_complex(const std::string& name);

enum class NoiseTarget : std::uint8_t { all_generators, one_generator };

struct ExperimentConfig {
  std::uint64_t seed = 1;
  Rational epsilon;  ///< noise rate handed to noise_injector
  /// Either a standard complex name or a file; the file wins when set.
  std::string complex_name = "rp2";
  std::optional<std::filesystem::path> complex_path;
  /// 2-cocycle file; defaults to the indicator of the first triangle.
  std::optional<std::filesystem::path> phi_path;
  /// Genuine action of the fundamental-group presentation; a random gauge
  /// action of size `fiber` is drawn when absent.
  std::optional<std::filesystem::path> action_path;
  std::uint32_t fiber = 100;
  /// |Ω|, the truncation of the signed lift; 0 keeps all of Σ.
  std::uint32_t omega = 0;
  NoiseTarget noise_target = NoiseTarget::all_generators;
  unsigned threads = 1;
  std::optional<std::filesystem::path> output;
};

/// One end-to-end run. Rationals are exact; the CSV adds decimals.
struct RunReport {
  std::string complex;
  std::uint64_t seed = 0;
  Rational noise;
  unsigned gauge_draws = 0;  ///< 0 when the action came from a file
  bool lift_exact = false;
  Rational realized_noise;  ///< d_H(ψ, noised ψ)
  NormalizationReport normalization;
  ContradictionReport contradiction;

  bool holds() const { return normalization.within_bounds() && contradiction.holds(); }
};

/// Gauge actions drawn before giving up on an exact lift.
inline constexpr unsigned kMaxGaugeDraws = 16;

/// Default 2-cocycle for a surface: the indicator of the first triangle
/// when H¹ ≠ 0 (a nontrivial class on the surfaces of the suite), otherwise
/// the coboundary of the first edge.
F2Cochain default_cocycle(const SimplicialComplex& x);

/// ψ with each image σ replaced by π∘σ, π uniform on a ⌊ε|Σ|⌋-subset.
/// Images of `skip` generators are left alone. Requires 0 ≤ ε ≤ 1.
AlmostAction noise_injector(const AlmostAction& action, const Rational& epsilon, std::uint64_t seed,
                            const std::vector<std::string>& skip = {});

/// Synthetic pipeline: gauge action f, signed lift ψ, optional truncation,
/// noise, normalize_sofic_approx, induced quotient, cover, ζ, distances.
/// Stage failures are rethrown as InputError naming the stage.
RunReport run_pipeline(const ExperimentConfig& config);

/// Runs every (ε, seed) with seeds config.seed, config.seed+1, ..., using
/// config.threads workers. Rows are ordered by ε, then seed.
std::vector<RunReport> sweep(const ExperimentConfig& config, const std::vector<Rational>& epsilons,
                             std::uint32_t runs_per_epsilon = 1);

/// The sweep above over every standard complex. Rows ordered by complex,
/// then ε, then seed.
std::vector<RunReport> suite(const ExperimentConfig& config, const std::vector<Rational>& epsilons,
                             std::uint32_t runs_per_epsilon = 1);

CsvTable run_report_table(const std::vector<RunReport>& rows);

/// The ε list used by `experiment sweep` when none is given.
std::vector<Rational> default_epsilons();

}  // namespace sofic

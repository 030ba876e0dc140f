#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sofic/complex.hpp"
#include "sofic/sym_cochain.hpp"

namespace sofic {

/// A closed walk u₀ u₁ … u_m = u₀ in the 1-skeleton. The trivial cycle at
/// v is the single vertex (v).
struct Cycle {
  std::vector<Vertex> vertices;

  static Cycle trivial(Vertex v) { return Cycle{{v}}; }
  Vertex base() const { return vertices.front(); }
  std::size_t length() const { return vertices.size() - 1; }
  bool is_trivial() const { return vertices.size() == 1; }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

/// Throws InputError unless C is closed and walks along edges of X.
void validate_cycle(const SimplicialComplex& x, const Cycle& c);

/// f(u_{m-1}u_m) ∘ … ∘ f(u_0u_1), computed pointwise on [n].
ErrPerm evaluate_cycle(const SymCochain& f, const Cycle& c);

/// ∩ dom f(u_i u_{i+1}) as a sorted index list. f(C) can be defined on
/// more points than this.
std::vector<Point> cycle_domain(const SymCochain& f, const Cycle& c);

/// EE: u → u w u. EC: u w u → u. TE: u v → u w v for a triangle uwv.
/// TC: u w v → u v for a triangle uwv.
enum class MoveKind : std::uint8_t { EE, EC, TE, TC };

const char* move_name(MoveKind k);

struct Move {
  MoveKind kind = MoveKind::EE;
  /// Index of the vertex u at which the pattern starts.
  std::size_t position = 0;
  /// Inserted vertex for EE and TE; ignored otherwise.
  Vertex w = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Applies one move; throws InputError when the pattern does not match.
Cycle relation_step(const SimplicialComplex& x, const Cycle& c, const Move& m);

/// Every move applicable to C whose result has length ≤ max_length.
std::vector<Move> applicable_moves(const SimplicialComplex& x, const Cycle& c, std::size_t max_length);

struct ContractibilityVerdict {
  bool found = false;
  std::vector<Move> steps;    ///< C = C₀ ∼ C₁ ∼ … ∼ C_triv
  std::vector<Cycle> path;    ///< C₀ … C_triv
  std::size_t explored = 0;
  /// All cycles of length ≤ L reachable from C were visited without
  /// finding the trivial cycle. This is still not a proof of
  /// non-contractibility: longer intermediate cycles were never tried.
  bool length_bound_exhausted = false;
};

/// Breadth-first search over cycles of length ≤ max_length, visiting at
/// most max_states cycles.
ContractibilityVerdict is_contractible(const SimplicialComplex& x, const Cycle& c, std::size_t max_length,
                                       std::size_t max_states = 1'000'000);

struct GoodCheckReport {
  bool ok = true;
  std::optional<Cycle> counterexample;
  Point counterexample_index = kError;
  std::size_t cycles = 0;
  std::size_t steps_checked = 0;  ///< EC, TE and TC steps
  std::size_t step_failures = 0;  ///< both sides defined and different
  std::optional<Cycle> step_failure_from;
  std::optional<Move> step_failure_move;
  std::size_t definedness_gaps = 0;  ///< EC/TE/TC steps defined on one side only
  std::size_t ee_steps = 0;
  std::size_t ee_gaps = 0;
  bool budget_hit = false;
};

/// From the trivial cycle at each vertex, enumerates contractible cycles of
/// length ≤ max_length (at most max_cycles_per_base per vertex). Every
/// reached C must satisfy f(C).j ∈ {j, undefined}. Along every enumerated
/// step C₁ → C₂, f(C₁).j = f(C₂).j is required where both sides are defined;
/// EE steps are only logged.
GoodCheckReport good_function_check(const SymCochain& f, std::size_t max_length,
                                    std::size_t max_cycles_per_base = 300);

}  // namespace sofic

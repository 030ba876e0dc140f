#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sofic/rational.hpp"
#include "sofic/rng.hpp"

namespace sofic {

/// Bipartite graph (L = [left], R = [right], E) with every right vertex of
/// the same degree r. Neighbor lists may repeat a left vertex (multigraph).
class SamplerGraph {
 public:
  /// Throws InputError when right degrees differ or an endpoint is out of
  /// range.
  SamplerGraph(std::uint32_t left, std::vector<std::vector<std::uint32_t>> right_neighbors);

  static SamplerGraph complete(std::uint32_t left, std::uint32_t right);
  /// Each right vertex picks r left neighbors uniformly without repetition.
  static SamplerGraph random(std::uint32_t left, std::uint32_t right, std::uint32_t r, SplitMix64& rng);

  std::uint32_t left() const { return left_; }
  std::uint32_t right() const { return static_cast<std::uint32_t>(nbrs_.size()); }
  std::uint32_t degree() const { return degree_; }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return nbrs_.at(v); }

 private:
  std::uint32_t left_ = 0;
  std::uint32_t degree_ = 0;
  std::vector<std::vector<std::uint32_t>> nbrs_;
};

struct SamplerVerdict {
  bool pass = true;
  std::optional<std::vector<std::uint32_t>> failing_set;
  std::uint64_t sets_checked = 0;
  bool exhaustive = false;
};

/// Largest |L| enumerated exhaustively.
inline constexpr std::uint32_t kSamplerExhaustiveLimit = 20;

/// A fails when Pr_{v∈R}[|A∩N(v)|/r > |A|/n + α] > β|A|/n. Exhaustive over
/// all A ⊆ L when |L| ≤ kSamplerExhaustiveLimit; otherwise all singletons,
/// their complements, and `random_sets` seeded random subsets.
SamplerVerdict sampler_check(const SamplerGraph& g, const Rational& alpha, const Rational& beta,
                             std::uint64_t seed = 1, std::uint32_t random_sets = 4096);

}  // namespace sofic

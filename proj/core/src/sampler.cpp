#include "sofic/sampler.hpp"

#include <bit>

#include "sofic/error.hpp"

namespace sofic {

SamplerGraph::SamplerGraph(std::uint32_t left, std::vector<std::vector<std::uint32_t>> right_neighbors)
    : left_(left), nbrs_(std::move(right_neighbors)) {
  if (left_ == 0) throw InputError("sampler graph needs left vertices");
  if (nbrs_.empty()) throw InputError("sampler graph needs right vertices");
  degree_ = static_cast<std::uint32_t>(nbrs_[0].size());
  if (degree_ == 0) throw InputError("right vertices need at least one neighbor");
  for (const auto& n : nbrs_) {
    if (n.size() != degree_) throw InputError("graph is not right-regular");
    for (auto u : n)
      if (u >= left_) throw InputError("neighbor " + std::to_string(u) + " is not a left vertex");
  }
}

SamplerGraph SamplerGraph::complete(std::uint32_t left, std::uint32_t right) {
  std::vector<std::uint32_t> all(left);
  for (std::uint32_t u = 0; u < left; ++u) all[u] = u;
  return SamplerGraph(left, std::vector<std::vector<std::uint32_t>>(right, all));
}

SamplerGraph SamplerGraph::random(std::uint32_t left, std::uint32_t right, std::uint32_t r, SplitMix64& rng) {
  if (r > left) throw InputError("degree exceeds the number of left vertices");
  std::vector<std::vector<std::uint32_t>> nbrs;
  for (std::uint32_t v = 0; v < right; ++v) nbrs.push_back(rng.sample(left, r));
  return SamplerGraph(left, std::move(nbrs));
}

namespace {

// Precomputed exact comparisons, indexed by |A| and the count in question.
struct Thresholds {
  std::vector<std::vector<bool>> heavy;  // [a][c]: c/r > a/n + α
  std::vector<std::vector<bool>> fails;  // [a][b]: b/|R| > β a/n

  Thresholds(const SamplerGraph& g, const Rational& alpha, const Rational& beta) {
    const std::uint32_t n = g.left(), r = g.degree(), m = g.right();
    heavy.assign(n + 1, std::vector<bool>(r + 1));
    fails.assign(n + 1, std::vector<bool>(m + 1));
    for (std::uint32_t a = 0; a <= n; ++a) {
      const Rational density(static_cast<unsigned long>(a), static_cast<unsigned long>(n));
      for (std::uint32_t c = 0; c <= r; ++c)
        heavy[a][c] = Rational(static_cast<unsigned long>(c), static_cast<unsigned long>(r)) > density + alpha;
      for (std::uint32_t b = 0; b <= m; ++b)
        fails[a][b] = Rational(static_cast<unsigned long>(b), static_cast<unsigned long>(m)) > beta * density;
    }
  }
};

bool set_fails(const SamplerGraph& g, const Thresholds& t, const std::vector<bool>& in, std::uint32_t size) {
  std::uint32_t bad = 0;
  for (std::uint32_t v = 0; v < g.right(); ++v) {
    std::uint32_t c = 0;
    for (auto u : g.neighbors(v)) c += in[u];
    bad += t.heavy[size][c];
  }
  return t.fails[size][bad];
}

std::vector<std::uint32_t> members(const std::vector<bool>& in) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t u = 0; u < in.size(); ++u)
    if (in[u]) out.push_back(u);
  return out;
}

}  // namespace

SamplerVerdict sampler_check(const SamplerGraph& g, const Rational& alpha, const Rational& beta,
                             std::uint64_t seed, std::uint32_t random_sets) {
  const Thresholds t(g, alpha, beta);
  const std::uint32_t n = g.left();
  SamplerVerdict out;
  auto check = [&](const std::vector<bool>& in) {
    ++out.sets_checked;
    std::uint32_t size = 0;
    for (bool b : in) size += b;
    if (set_fails(g, t, in, size)) {
      out.pass = false;
      out.failing_set = members(in);
      return true;
    }
    return false;
  };

  if (n <= kSamplerExhaustiveLimit) {
    out.exhaustive = true;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const auto size = static_cast<std::uint32_t>(std::popcount(mask));
      std::uint32_t bad = 0;
      for (std::uint32_t v = 0; v < g.right(); ++v) {
        std::uint32_t c = 0;
        for (auto u : g.neighbors(v)) c += static_cast<std::uint32_t>((mask >> u) & 1u);
        bad += t.heavy[size][c];
      }
      ++out.sets_checked;
      if (t.fails[size][bad]) {
        out.pass = false;
        std::vector<std::uint32_t> a;
        for (std::uint32_t u = 0; u < n; ++u)
          if ((mask >> u) & 1u) a.push_back(u);
        out.failing_set = std::move(a);
        return out;
      }
    }
    return out;
  }

  for (std::uint32_t u = 0; u < n; ++u) {
    std::vector<bool> in(n, false);
    in[u] = true;
    if (check(in)) return out;
    in.flip();
    if (check(in)) return out;
  }
  SplitMix64 rng(seed);
  for (std::uint32_t s = 0; s < random_sets; ++s) {
    std::vector<bool> in(n);
    for (std::uint32_t u = 0; u < n; ++u) in[u] = rng.chance(1, 2);
    if (check(in)) return out;
  }
  return out;
}

}  // namespace sofic

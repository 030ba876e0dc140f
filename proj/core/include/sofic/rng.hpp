#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace sofic {

/// SplitMix64 stream. Every random choice in the library draws from one of
/// these, seeded from a single 64-bit value, so outputs are reproducible
/// bit-for-bit across platforms (no std:: distribution objects are used).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  /// Bernoulli(num/den).
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  /// Derived independent stream, e.g. one per sweep point.
  SplitMix64 fork(std::uint64_t salt) {
    return SplitMix64(next() ^ (salt * 0xd1b54a32d192ed03ULL));
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  std::vector<std::uint32_t> permutation(std::uint32_t n) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    shuffle(std::span<std::uint32_t>(p));
    return p;
  }

  /// k distinct elements of [0, n), in random order.
  std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    for (std::uint32_t i = 0; i < k && i < n; ++i) {
      std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
      std::swap(p[i], p[j]);
    }
    p.resize(k < n ? k : n);
    return p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sofic

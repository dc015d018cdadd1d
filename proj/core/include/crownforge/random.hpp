#pragma once

#include <cstdint>
#include <limits>

namespace crownforge {

/// SplitMix64 bit generator. Cheap to seed, so every trial or task can own a
/// stream derived from (master seed, index) without shared mutable state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound) by rejection, identical on every platform.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t v;
    do {
      v = (*this)();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

using Rng = SplitMix64;

/// Seed of the k-th independent stream under a master seed.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t k) {
  SplitMix64 a(master);
  const std::uint64_t m = a();
  SplitMix64 b(m ^ (k * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
  return b();
}

}  // namespace crownforge

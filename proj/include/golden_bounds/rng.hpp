#pragma once

#include <cstdint>

namespace golden_bounds {

/// SplitMix64 finalizer.
std::uint64_t splitmix64_mix(std::uint64_t z);

/// Counter-based SplitMix64 stream: draw i (0-based) is
/// splitmix64_mix(key + (i + 1) * 0x9e3779b97f4a7c15), which matches the
/// classic sequential SplitMix64 generator seeded with `key`. Any draw can be
/// recomputed from (key, i) alone, so streams are reproducible across languages.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t at(std::uint64_t index) const;
  std::uint64_t next_u64() { return at(counter_++); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller; consumes two draws.
  double normal();

  /// Independent stream keyed by (key, tag).
  CounterRng substream(std::uint64_t tag) const;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Seed of instance `index` in a sweep rooted at `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace golden_bounds

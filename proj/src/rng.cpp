#include "golden_bounds/rng.hpp"

#include <cmath>
#include <numbers>

namespace golden_bounds {

namespace {
constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::at(std::uint64_t index) const { return splitmix64_mix(key_ + (index + 1) * kGamma); }

double CounterRng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterRng::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CounterRng CounterRng::substream(std::uint64_t tag) const {
  return CounterRng(splitmix64_mix(key_ ^ splitmix64_mix(tag + kGamma)));
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) { return CounterRng(base).at(index); }

}  // namespace golden_bounds

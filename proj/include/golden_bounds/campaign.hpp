#pragma once

// Seeded certification sweeps: instance i of a sweep draws its own seed from
// (base seed, i), so instances can be produced in any order.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "golden_bounds/report.hpp"

namespace golden_bounds {

struct CertifierInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string summary;
};

const std::vector<CertifierInfo>& certifier_catalog();

/// Canonical id for an id or alias; nullopt if unknown.
std::optional<std::string> resolve_certifier(std::string_view name);

/// Fixed values replacing the per-instance random draws.
struct Overrides {
  std::optional<double> alpha, p, q, r, m, big_m, s, t;
};

struct SweepConfig {
  std::string id;
  std::uint64_t seed = 0;
  std::size_t n = 0;  // 0 cycles n over 2..6
  std::size_t count = 200;
  double tolerance = 1e-9;
  std::optional<bool> commuting;  // unset alternates general / commuting blocks
  Overrides overrides;
};

/// Instance i: n = 2 + i mod 5 (unless fixed), commuting on odd blocks of five,
/// complex field on odd blocks of ten. Throws HypothesisViolated when overrides
/// break the hypothesis, BadRange on invalid parameters.
InequalityReport run_instance(const SweepConfig& cfg, std::size_t index);

struct SweepResult {
  std::vector<InequalityReport> reports;  // ordered by instance index
  std::size_t violations = 0;
};

/// Runs instances on up to `threads` workers (0 = hardware concurrency).
SweepResult run_sweep(const SweepConfig& cfg, unsigned threads = 0);

}  // namespace golden_bounds

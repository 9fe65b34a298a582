#pragma once

// Seeded generation of matrices and pairs that satisfy each inequality's
// hypothesis by construction. Every pair carries the order certificates of
// the hypothesis it advertises.

#include <cstdint>
#include <string_view>

#include "golden_bounds/matrix.hpp"
#include "golden_bounds/orders.hpp"
#include "golden_bounds/rng.hpp"
#include "json.hpp"

namespace golden_bounds {

enum class SamplerMode { General, Commuting };
enum class ScalarField { Real, Complex };

std::string_view to_string(SamplerMode m);
std::string_view to_string(ScalarField f);

struct SamplerConfig {
  std::size_t n = 4;
  std::uint64_t seed = 0;
  double lo = 1.0;
  double hi = 2.0;
  SamplerMode mode = SamplerMode::General;
  ScalarField field = ScalarField::Real;

  /// n >= 1 and lo <= hi; throws BadRange.
  void validate() const;
};

/// {"n": 4, "seed": 7, "range": [lo, hi], "mode": "general"|"commuting", "field": "real"|"complex"}
SamplerConfig sampler_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SamplerConfig& cfg);

/// Haar-distributed orthogonal (real) or unitary (complex) matrix: QR of a
/// Gaussian matrix with the R diagonal made positive.
Matrix random_unitary(std::size_t n, ScalarField field, CounterRng& rng);

/// sA <= B <= tA (Loewner) or sA <=_ols B <=_ols tA, depending on the generator.
struct PdPair {
  PositiveDefiniteMatrix a;
  PositiveDefiniteMatrix b;
  double s;
  double t;
  OrderCertificate lower;  // sA <= B
  OrderCertificate upper;  // B <= tA
};

/// e^s e^H <=_ols e^K <=_ols e^t e^H with spectra of H, K in [m, M].
struct ExponentialPair {
  HermitianMatrix h;
  HermitianMatrix k;
  double m;
  double big_m;
  double s;
  double t;
  OrderCertificate lower;
  OrderCertificate upper;
};

/// mI <= A <= B <= MI in the Loewner or Olson order.
struct OrderedChain {
  PositiveDefiniteMatrix a;
  PositiveDefiniteMatrix b;
  double m;
  double big_m;
  OrderCertificate bottom;  // mI <= A
  OrderCertificate middle;  // A <= B
  OrderCertificate top;     // B <= MI
};

/// e^m I <=_ols e^H <=_ols e^K <=_ols e^M I.
struct ExponentialChain {
  HermitianMatrix h;
  HermitianMatrix k;
  double m;
  double big_m;
  OrderCertificate bottom;
  OrderCertificate middle;
  OrderCertificate top;
};

/// Deterministic sampler: identical config and call sequence give bit-identical
/// output. In commuting mode all draws share one eigenbasis.
class Sampler {
 public:
  explicit Sampler(SamplerConfig cfg);

  const SamplerConfig& config() const noexcept { return cfg_; }

  PositiveDefiniteMatrix random_pd();
  PositiveDefiniteMatrix random_pd(double lo, double hi);

  HermitianMatrix random_bounded_hermitian();
  HermitianMatrix random_bounded_hermitian(double m, double big_m);

  /// A random PD; B = A^{1/2} C A^{1/2} with spec(C) in [s, t].
  PdPair sandwich_pair(double s, double t);

  /// A, B with spectra in [m, M], so (m/M)A <=_ols B <=_ols (M/m)A.
  PdPair olson_bounded_pair(double m, double big_m);

  /// H, K with spectra in [m, M]; s = m - M, t = M - m. With force_equal, K = H.
  ExponentialPair olson_exponential_pair(double m, double big_m, bool force_equal = false);

  /// Loewner chain via congruence A = B^{1/2} C B^{1/2}.
  OrderedChain loewner_chain(double m, double big_m);

  /// Olson chain: separated spectra (general mode) or paired eigenvalues on a
  /// shared basis (commuting mode).
  OrderedChain olson_chain(double m, double big_m);

  /// e^H <=_ols e^K with m <= H, K <= M, built like olson_chain on the exponents.
  ExponentialChain exponential_chain(double m, double big_m);

  /// k x n matrix with orthonormal rows (U U^H = I).
  Matrix random_isometry(std::size_t k);

 private:
  Matrix basis();
  std::vector<double> uniform_spectrum(double lo, double hi);

  SamplerConfig cfg_;
  CounterRng rng_;
  Matrix shared_basis_;
};

nlohmann::json to_json(const PdPair& p);
nlohmann::json to_json(const ExponentialPair& p);
nlohmann::json to_json(const OrderedChain& c);
nlohmann::json to_json(const ExponentialChain& c);

}  // namespace golden_bounds

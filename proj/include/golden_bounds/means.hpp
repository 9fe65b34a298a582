#pragma once

#include <span>
#include <vector>

#include "golden_bounds/matrix.hpp"

namespace golden_bounds {

/// Weight alpha in [0, 1] and a positive exponent p. Throws BadRange / NonPositive.
struct MeanParams {
  double alpha;
  double p = 1.0;

  void validate() const;
};

/// Kubo-Ando weighted geometric mean A #_alpha B = A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}.
/// Throws CondError when cond(A) > 1e12, BadRange for alpha outside [0, 1].
PositiveDefiniteMatrix geometric_mean(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                      double alpha);

/// exp((1 - alpha) H + alpha K).
PositiveDefiniteMatrix log_euclidean(const HermitianMatrix& h, const HermitianMatrix& k, double alpha);

/// (e^{qH} #_alpha e^{qK})^{1/q}; tends to log_euclidean(H, K, alpha) as q -> 0.
PositiveDefiniteMatrix mean_power(const HermitianMatrix& h, const HermitianMatrix& k, double alpha, double q);

struct LimitSample {
  double q;
  double distance;  // ||mean_power(q) - log_euclidean||_F
};

/// Frobenius distance of the mean power to its q -> 0 limit along a strictly
/// descending positive q sequence. Throws EmptySequence / BadRange.
std::vector<LimitSample> limit_probe(const HermitianMatrix& h, const HermitianMatrix& k, double alpha,
                                     std::span<const double> q_sequence);

}  // namespace golden_bounds

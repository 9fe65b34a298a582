#pragma once

// Spectral decomposition and matrix functions. Every matrix function goes
// through the eigendecomposition: f(A) = V f(Lambda) V^H.

#include <functional>
#include <vector>

#include "golden_bounds/matrix.hpp"

namespace golden_bounds {

struct JacobiOptions {
  /// Stop when the off-diagonal Frobenius mass is <= tolerance * ||A||_F.
  double tolerance = 1e-14;
  int max_sweeps = 100;
};

/// Cyclic Jacobi with complex unitary rotations. Throws NoConvergence.
SpectralDecomposition spectral_decompose(const HermitianMatrix& a, const JacobiOptions& options = {});

using ScalarFunction = std::function<double(double)>;

/// V f(Lambda) V^H. Throws DomainError if f is not finite at some eigenvalue.
HermitianMatrix apply_function(const HermitianMatrix& a, const ScalarFunction& f);
HermitianMatrix apply_function(const SpectralDecomposition& s, const ScalarFunction& f);

/// A^r through the spectrum; power(A, 0) is exactly I.
PositiveDefiniteMatrix power(const PositiveDefiniteMatrix& a, double r);

/// c * A, built from the scaled spectrum of A (c > 0).
PositiveDefiniteMatrix scale(const PositiveDefiniteMatrix& a, double c);

PositiveDefiniteMatrix exp_h(const HermitianMatrix& h);
HermitianMatrix log_pd(const PositiveDefiniteMatrix& a);

std::vector<double> eigenvalues_desc(const HermitianMatrix& a);
std::vector<double> eigenvalues_desc(const PositiveDefiniteMatrix& a);

double min_eigenvalue(const HermitianMatrix& a);
double max_eigenvalue(const HermitianMatrix& a);

/// Singular values of a Hermitian matrix, descending (|eigenvalues| sorted).
std::vector<double> singular_values(const HermitianMatrix& a);

/// Sum of the k largest singular values, 1 <= k <= n. Throws BadIndex.
double ky_fan_norm(const HermitianMatrix& a, std::size_t k);

enum class SchattenIndex { One, Two, Infinity };

double schatten_norm(const HermitianMatrix& a, SchattenIndex p);

cplx trace(const Matrix& a);
cplx trace(const HermitianMatrix& a);

}  // namespace golden_bounds

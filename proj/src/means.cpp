#include "golden_bounds/means.hpp"

#include <cmath>
#include <string>

#include "golden_bounds/error.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

namespace {

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw Error(ErrorCode::BadRange, "alpha must lie in [0, 1], got " + std::to_string(alpha));
}

}  // namespace

void MeanParams::validate() const {
  require_alpha(alpha);
  if (!(p > 0.0)) throw Error(ErrorCode::NonPositive, "exponent p must be positive");
}

PositiveDefiniteMatrix geometric_mean(const PositiveDefiniteMatrix& a, const PositiveDefiniteMatrix& b,
                                      double alpha) {
  require_alpha(alpha);
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "geometric mean operands differ in size");
  if (a.condition_number() > 1e12) throw Error(ErrorCode::CondError, "cond(A) exceeds 1e12");
  if (alpha == 0.0) return a;
  if (alpha == 1.0) return b;

  const SpectralDecomposition& sa = a.spectrum();
  std::vector<double> root(sa.dim());
  std::vector<double> inv_root(sa.dim());
  for (std::size_t i = 0; i < sa.dim(); ++i) {
    root[i] = std::sqrt(sa.eigenvalues[i]);
    inv_root[i] = 1.0 / root[i];
  }
  // A^{+-1/2} = V diag(.) V^H
  const Matrix a_half = multiply_adjoint(scale_columns(sa.eigenvectors, root), sa.eigenvectors);
  const Matrix a_inv_half = multiply_adjoint(scale_columns(sa.eigenvectors, inv_root), sa.eigenvectors);

  const PositiveDefiniteMatrix inner(congruence(a_inv_half, b.hermitian()));
  const PositiveDefiniteMatrix inner_pow = power(inner, alpha);
  return PositiveDefiniteMatrix(congruence(a_half, inner_pow.hermitian()));
}

PositiveDefiniteMatrix log_euclidean(const HermitianMatrix& h, const HermitianMatrix& k, double alpha) {
  require_alpha(alpha);
  if (h.dim() != k.dim()) throw Error(ErrorCode::DimMismatch, "log-Euclidean operands differ in size");
  return exp_h((1.0 - alpha) * h + alpha * k);
}

PositiveDefiniteMatrix mean_power(const HermitianMatrix& h, const HermitianMatrix& k, double alpha, double q) {
  MeanParams{alpha, q}.validate();
  // Exact identities; the generic route would lose ~eps/q through the 1/q power.
  if (alpha == 0.0) return exp_h(h);
  if (alpha == 1.0 || h.matrix() == k.matrix()) return exp_h(k);
  const PositiveDefiniteMatrix m = geometric_mean(exp_h(q * h), exp_h(q * k), alpha);
  return power(m, 1.0 / q);
}

std::vector<LimitSample> limit_probe(const HermitianMatrix& h, const HermitianMatrix& k, double alpha,
                                     std::span<const double> q_sequence) {
  if (q_sequence.empty()) throw Error(ErrorCode::EmptySequence, "q sequence is empty");
  const PositiveDefiniteMatrix limit = log_euclidean(h, k, alpha);
  std::vector<LimitSample> out;
  for (std::size_t i = 0; i < q_sequence.size(); ++i) {
    const double q = q_sequence[i];
    if (!(q > 0.0)) throw Error(ErrorCode::NonPositive, "q must be positive");
    if (i > 0 && !(q < q_sequence[i - 1]))
      throw Error(ErrorCode::BadRange, "q sequence must be strictly descending");
    const Matrix diff = mean_power(h, k, alpha, q).matrix() - limit.matrix();
    out.push_back({q, diff.frobenius_norm()});
  }
  return out;
}

}  // namespace golden_bounds

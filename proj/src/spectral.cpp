#include "golden_bounds/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "golden_bounds/error.hpp"
#include "golden_bounds/kernels.hpp"

namespace golden_bounds {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zero a(p,q) with J = diag(1, e^{-i phi}) R(theta) in the (p,q) plane:
// a <- J^H a J and vh <- J^H vh, where vh accumulates V^H.
void rotate(Matrix& a, Matrix& vh, std::size_t p, std::size_t q, const kernels::KernelTable& k) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const cplx phase = apq / mag;

  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const cplx g00 = c;
  const cplx g01 = -s * phase;
  const cplx g10 = s;
  const cplx g11 = c * phase;

  const std::size_t n = a.rows();
  k.rotate_rows(a.row(p), a.row(q), n, g00, g01, g10, g11);
  // Columns p, q follow from Hermiticity of the result.
  for (std::size_t j = 0; j < n; ++j) {
    if (j == p || j == q) continue;
    a(j, p) = std::conj(a(p, j));
    a(j, q) = std::conj(a(q, j));
  }
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  k.rotate_rows(vh.row(p), vh.row(q), n, g00, g01, g10, g11);
}

HermitianMatrix hermitian_from_product(const Matrix& m) {
  return make_hermitian(m, std::numeric_limits<double>::infinity());
}

}  // namespace

SpectralDecomposition spectral_decompose(const HermitianMatrix& h, const JacobiOptions& options) {
  const std::size_t n = h.dim();
  const auto& k = kernels::active();
  Matrix a = h.matrix();
  Matrix vh = Matrix::identity(n);
  const double norm = a.frobenius_norm();
  const double target = options.tolerance * norm;

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == options.max_sweeps)
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, vh, p, q, k);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  SpectralDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.eigenvalues[c] = a(src, src).real();
    // column c of V is the conjugate of row src of V^H
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, c) = std::conj(vh(src, r));
  }
  return out;
}

HermitianMatrix apply_function(const SpectralDecomposition& s, const ScalarFunction& f) {
  std::vector<double> values(s.dim());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f(s.eigenvalues[i]);
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::DomainError,
                  "function undefined at eigenvalue " + std::to_string(s.eigenvalues[i]));
  }
  return hermitian_from_product(multiply_adjoint(scale_columns(s.eigenvectors, values), s.eigenvectors));
}

HermitianMatrix apply_function(const HermitianMatrix& a, const ScalarFunction& f) {
  return apply_function(spectral_decompose(a), f);
}

namespace {

PositiveDefiniteMatrix map_positive(const SpectralDecomposition& s, double (*f)(double, double),
                                    double arg) {
  std::vector<double> values(s.dim());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = f(s.eigenvalues[i], arg);
    if (!std::isfinite(values[i]))
      throw Error(ErrorCode::DomainError,
                  "function not finite at eigenvalue " + std::to_string(s.eigenvalues[i]));
  }
  return PositiveDefiniteMatrix::from_spectrum(s.eigenvectors, std::move(values));
}

}  // namespace

PositiveDefiniteMatrix power(const PositiveDefiniteMatrix& a, double r) {
  if (r == 0.0) return PositiveDefiniteMatrix::identity(a.dim());
  if (r == 1.0) return a;
  return map_positive(a.spectrum(), [](double x, double e) { return std::pow(x, e); }, r);
}

PositiveDefiniteMatrix scale(const PositiveDefiniteMatrix& a, double c) {
  if (!(c > 0.0)) throw Error(ErrorCode::NonPositive, "scale factor must be positive");
  return map_positive(a.spectrum(), [](double x, double f) { return f * x; }, c);
}

PositiveDefiniteMatrix exp_h(const HermitianMatrix& h) {
  return map_positive(spectral_decompose(h), [](double x, double) { return std::exp(x); }, 0.0);
}

HermitianMatrix log_pd(const PositiveDefiniteMatrix& a) {
  return apply_function(a.spectrum(), [](double x) { return std::log(x); });
}

std::vector<double> eigenvalues_desc(const HermitianMatrix& a) { return spectral_decompose(a).eigenvalues; }

std::vector<double> eigenvalues_desc(const PositiveDefiniteMatrix& a) { return a.spectrum().eigenvalues; }

double min_eigenvalue(const HermitianMatrix& a) { return eigenvalues_desc(a).back(); }
double max_eigenvalue(const HermitianMatrix& a) { return eigenvalues_desc(a).front(); }

std::vector<double> singular_values(const HermitianMatrix& a) {
  std::vector<double> s = eigenvalues_desc(a);
  for (double& x : s) x = std::abs(x);
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

double ky_fan_norm(const HermitianMatrix& a, std::size_t k) {
  if (k < 1 || k > a.dim())
    throw Error(ErrorCode::BadIndex, "Ky Fan index " + std::to_string(k) + " outside 1.." +
                                         std::to_string(a.dim()));
  const std::vector<double> s = singular_values(a);
  return std::accumulate(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), 0.0);
}

double schatten_norm(const HermitianMatrix& a, SchattenIndex p) {
  const std::vector<double> s = singular_values(a);
  switch (p) {
    case SchattenIndex::One: return std::accumulate(s.begin(), s.end(), 0.0);
    case SchattenIndex::Two: {
      double sq = 0.0;
      for (double x : s) sq += x * x;
      return std::sqrt(sq);
    }
    case SchattenIndex::Infinity: return s.front();
  }
  return 0.0;
}

cplx trace(const Matrix& a) {
  if (!a.square()) throw Error(ErrorCode::NonSquare, "trace of a non-square matrix");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

cplx trace(const HermitianMatrix& a) { return trace(a.matrix()); }

}  // namespace golden_bounds

#include "golden_bounds/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "golden_bounds/error.hpp"
#include "golden_bounds/kernels.hpp"
#include "golden_bounds/spectral.hpp"

namespace golden_bounds {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
  Matrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimMismatch, "ragged matrix rows");
    std::copy(row.begin(), row.end(), m.row(i++));
  }
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

double Matrix::frobenius_norm() const {
  return std::sqrt(kernels::active().sum_abs2(data_.data(), data_.size()));
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::DimMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw Error(ErrorCode::DimMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx scale) {
  for (cplx& z : data_) z *= scale;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimMismatch, "matrix product");
  Matrix c(a.rows(), b.cols());
  kernels::active().gemm(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(),
                         c.data().data());
  return c;
}

Matrix multiply_adjoint(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::DimMismatch, "adjoint product");
  Matrix c(a.rows(), b.rows());
  kernels::active().gemm_adjoint(a.rows(), a.cols(), b.rows(), a.data().data(), b.data().data(),
                                 c.data().data());
  return c;
}

Matrix scale_columns(const Matrix& a, std::span<const double> d) {
  if (a.cols() != d.size()) throw Error(ErrorCode::DimMismatch, "column scaling");
  Matrix out(a.rows(), a.cols());
  kernels::active().scale_columns(a.rows(), a.cols(), a.data().data(), d.data(), out.data().data());
  return out;
}

double commutator_norm(const Matrix& a, const Matrix& b) { return (a * b - b * a).frobenius_norm(); }

namespace {

// Exact Hermitian part; returns the raw defect max |m_ij - conj(m_ji)|.
double symmetrize(Matrix& m) {
  double defect = 0.0;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    defect = std::max(defect, 2.0 * std::abs(m(i, i).imag()));
    m(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = avg;
      m(j, i) = std::conj(avg);
    }
  }
  return defect;
}

}  // namespace

HermitianMatrix make_hermitian(const Matrix& raw, double relative_threshold) {
  if (!raw.square() || raw.rows() == 0) throw Error(ErrorCode::NonSquare, "Hermitian input must be square and non-empty");
  Matrix m = raw;
  const double scale = raw.max_abs();
  const double defect = symmetrize(m);
  if (defect > relative_threshold * scale)
    throw Error(ErrorCode::NotHermitian, "Hermiticity defect " + std::to_string(defect) +
                                             " exceeds threshold");
  return HermitianMatrix(std::move(m), defect);
}

HermitianMatrix make_hermitian(const Matrix& raw) { return make_hermitian(raw, 1e-8); }

HermitianMatrix HermitianMatrix::zero(std::size_t n) { return make_hermitian(Matrix(n, n)); }
HermitianMatrix HermitianMatrix::identity(std::size_t n) { return make_hermitian(Matrix::identity(n)); }
HermitianMatrix HermitianMatrix::scalar(std::size_t n, double value) {
  return make_hermitian(Matrix::identity(n) * cplx(value));
}
HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return make_hermitian(Matrix::diagonal(values));
}
HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ + b.m_, 0.0);
}
HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(a.m_ - b.m_, 0.0);
}
HermitianMatrix operator*(double s, const HermitianMatrix& a) { return HermitianMatrix(a.m_ * cplx(s), 0.0); }

HermitianMatrix congruence(const Matrix& t, const HermitianMatrix& a) {
  if (t.cols() != a.dim()) throw Error(ErrorCode::DimMismatch, "congruence");
  Matrix m = multiply_adjoint(t * a.matrix(), t);
  symmetrize(m);
  return make_hermitian(m);
}

Matrix SpectralDecomposition::reconstruct() const {
  return multiply_adjoint(scale_columns(eigenvectors, eigenvalues), eigenvectors);
}

PositiveDefiniteMatrix::PositiveDefiniteMatrix(HermitianMatrix h) : h_(std::move(h)) {
  auto s = std::make_shared<SpectralDecomposition>(spectral_decompose(h_));
  if (!(s->eigenvalues.back() > 0.0))
    throw Error(ErrorCode::NotPositiveDefinite,
                "smallest eigenvalue " + std::to_string(s->eigenvalues.back()) + " is not positive");
  spectrum_ = std::move(s);
}

PositiveDefiniteMatrix PositiveDefiniteMatrix::from_spectrum(Matrix eigenvectors,
                                                             std::vector<double> values) {
  const std::size_t n = values.size();
  if (!eigenvectors.square() || eigenvectors.rows() != n)
    throw Error(ErrorCode::DimMismatch, "eigenvector matrix does not match spectrum");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  auto s = std::make_shared<SpectralDecomposition>();
  s->eigenvalues.resize(n);
  s->eigenvectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    s->eigenvalues[c] = values[order[c]];
    for (std::size_t r = 0; r < n; ++r) s->eigenvectors(r, c) = eigenvectors(r, order[c]);
  }
  if (n == 0 || !(s->eigenvalues.back() > 0.0))
    throw Error(ErrorCode::NotPositiveDefinite, "spectrum is not strictly positive");
  Matrix m = s->reconstruct();
  symmetrize(m);
  return PositiveDefiniteMatrix(make_hermitian(m), std::move(s));
}

PositiveDefiniteMatrix PositiveDefiniteMatrix::identity(std::size_t n) {
  return from_spectrum(Matrix::identity(n), std::vector<double>(n, 1.0));
}

}  // namespace golden_bounds

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace golden_bounds {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. General-purpose carrier; the typed wrappers
/// below add the Hermitian / positive-definite invariants.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);
  static Matrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> data() noexcept { return data_; }
  std::span<const cplx> data() const noexcept { return data_; }
  cplx* row(std::size_t i) { return data_.data() + i * cols_; }
  const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

  Matrix adjoint() const;
  double frobenius_norm() const;
  double max_abs() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx scale);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

/// a * b^H
Matrix multiply_adjoint(const Matrix& a, const Matrix& b);

/// a * diag(d)
Matrix scale_columns(const Matrix& a, std::span<const double> d);

/// Commutator Frobenius norm ||ab - ba||_F.
double commutator_norm(const Matrix& a, const Matrix& b);

class HermitianMatrix;
HermitianMatrix make_hermitian(const Matrix& raw, double relative_threshold);

/// n x n complex matrix equal to its conjugate transpose (exactly, after
/// construction-time symmetrization).
class HermitianMatrix {
 public:
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix scalar(std::size_t n, double value);
  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix diagonal(std::initializer_list<double> values);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// max |raw_ij - conj(raw_ji)| of the input this was built from.
  double hermiticity_defect() const noexcept { return defect_; }
  double frobenius_norm() const { return m_.frobenius_norm(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a);
  friend HermitianMatrix operator*(const HermitianMatrix& a, double s) { return s * a; }

  friend HermitianMatrix make_hermitian(const Matrix& raw, double relative_threshold);

 private:
  HermitianMatrix(Matrix m, double defect) : m_(std::move(m)), defect_(defect) {}

  Matrix m_;
  double defect_ = 0.0;
};

/// Symmetrize `raw` into (raw + raw^H)/2. Throws NonSquare, or NotHermitian when
/// the defect exceeds 1e-8 * max|entry|.
HermitianMatrix make_hermitian(const Matrix& raw);

/// T A T^H, symmetrized.
HermitianMatrix congruence(const Matrix& t, const HermitianMatrix& a);

/// Descending eigenvalues with the matching unitary eigenvector matrix (columns).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  int sweeps = 0;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  Matrix reconstruct() const;
};

/// Hermitian matrix with strictly positive spectrum. The spectral decomposition
/// used to certify positivity is kept and reused by the matrix functions.
class PositiveDefiniteMatrix {
 public:
  /// Decomposes `h`; throws NotPositiveDefinite if the smallest eigenvalue is <= 0.
  explicit PositiveDefiniteMatrix(HermitianMatrix h);

  /// Build V diag(values) V^H from a unitary V; values must be positive.
  static PositiveDefiniteMatrix from_spectrum(Matrix eigenvectors, std::vector<double> values);
  static PositiveDefiniteMatrix identity(std::size_t n);

  std::size_t dim() const noexcept { return h_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return h_; }
  operator const HermitianMatrix&() const noexcept { return h_; }
  const Matrix& matrix() const noexcept { return h_.matrix(); }
  const SpectralDecomposition& spectrum() const noexcept { return *spectrum_; }

  double min_eigenvalue() const { return spectrum_->eigenvalues.back(); }
  double max_eigenvalue() const { return spectrum_->eigenvalues.front(); }
  double condition_number() const { return max_eigenvalue() / min_eigenvalue(); }

 private:
  PositiveDefiniteMatrix(HermitianMatrix h, std::shared_ptr<const SpectralDecomposition> s)
      : h_(std::move(h)), spectrum_(std::move(s)) {}

  HermitianMatrix h_;
  std::shared_ptr<const SpectralDecomposition> spectrum_;
};

}  // namespace golden_bounds

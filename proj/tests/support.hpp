#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "golden_bounds/matrix.hpp"

namespace test_support {

using golden_bounds::cplx;
using golden_bounds::HermitianMatrix;
using golden_bounds::Matrix;

// Test-side randomness is std::mt19937_64 so it stays independent of the library stream.
inline Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols, bool complex = true) {
  std::normal_distribution<double> nd;
  Matrix m(rows, cols);
  for (auto& z : m.data()) z = complex ? cplx(nd(gen), nd(gen)) : cplx(nd(gen), 0.0);
  return m;
}

inline HermitianMatrix random_hermitian(std::mt19937_64& gen, std::size_t n, bool complex = true) {
  const Matrix g = random_matrix(gen, n, n, complex);
  return golden_bounds::make_hermitian(g + g.adjoint());
}

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

// Independent eigenvalue oracle: Eigen's Householder tridiagonal QR.
inline std::vector<double> oracle_eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h.matrix()), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.rbegin(), v.rend());
  return v;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).max_abs(); }

inline double rel_diff(const Matrix& a, const Matrix& b) {
  return (a - b).frobenius_norm() / std::max(b.frobenius_norm(), 1e-300);
}

}  // namespace test_support

#include "golden_bounds/kernels.hpp"

#include <algorithm>

namespace golden_bounds::kernels {
namespace {

void gemm_ref(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += ail * brow[j];
    }
  }
}

void gemm_adjoint_ref(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                      cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx* brow = b + j * k;
      double re = 0.0;
      double im = 0.0;
      for (std::size_t l = 0; l < k; ++l) {
        // a * conj(b)
        re += arow[l].real() * brow[l].real() + arow[l].imag() * brow[l].imag();
        im += arow[l].imag() * brow[l].real() - arow[l].real() * brow[l].imag();
      }
      c[i * n + j] = {re, im};
    }
  }
}

void rotate_rows_ref(cplx* x, cplx* y, std::size_t len, cplx g00, cplx g01, cplx g10, cplx g11) {
  for (std::size_t j = 0; j < len; ++j) {
    const cplx xj = x[j];
    const cplx yj = y[j];
    x[j] = g00 * xj + g01 * yj;
    y[j] = g10 * xj + g11 * yj;
  }
}

void scale_columns_ref(std::size_t m, std::size_t n, const cplx* a, const double* d, cplx* out) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a[i * n + j] * d[j];
}

double sum_abs2_ref(const cplx* x, std::size_t len) {
  double s = 0.0;
  for (std::size_t i = 0; i < len; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar",           gemm_ref,          gemm_adjoint_ref,
                                 rotate_rows_ref,    scale_columns_ref, sum_abs2_ref};
  return table;
}

}  // namespace golden_bounds::kernels

// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after a runtime CPU check (see dispatch.cpp).

#include "golden_bounds/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace golden_bounds::kernels::detail {
namespace {

// One __m256d holds two interleaved complex values: [re0, im0, re1, im1].
inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// s * v for a broadcast complex scalar s = (sr, si)
inline __m256d cmul(__m256d sr, __m256d si, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, swapped));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void gemm_avx2(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      const __m256d sr = _mm256_set1_pd(ail.real());
      const __m256d si = _mm256_set1_pd(ail.imag());
      const cplx* brow = b + l * n;
      std::size_t j = 0;
      for (; j < n2; j += 2) store2(crow + j, _mm256_add_pd(load2(crow + j), cmul(sr, si, load2(brow + j))));
      for (; j < n; ++j) crow[j] += ail * brow[j];
    }
  }
}

void gemm_adjoint_avx2(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                       cplx* c) {
  const std::size_t k2 = k & ~std::size_t{1};
  const __m256d odd_sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx* brow = b + j * k;
      __m256d direct = _mm256_setzero_pd();  // [ar*br, ai*bi, ...]
      __m256d cross = _mm256_setzero_pd();   // [ar*bi, ai*br, ...]
      std::size_t l = 0;
      for (; l < k2; l += 2) {
        const __m256d av = load2(arow + l);
        const __m256d bv = load2(brow + l);
        direct = _mm256_fmadd_pd(av, bv, direct);
        cross = _mm256_fmadd_pd(av, _mm256_permute_pd(bv, 0b0101), cross);
      }
      double re = hsum(direct);
      double im = hsum(_mm256_mul_pd(cross, odd_sign));
      for (; l < k; ++l) {
        re += arow[l].real() * brow[l].real() + arow[l].imag() * brow[l].imag();
        im += arow[l].imag() * brow[l].real() - arow[l].real() * brow[l].imag();
      }
      c[i * n + j] = {re, im};
    }
  }
}

void rotate_rows_avx2(cplx* x, cplx* y, std::size_t len, cplx g00, cplx g01, cplx g10, cplx g11) {
  const __m256d r00 = _mm256_set1_pd(g00.real()), i00 = _mm256_set1_pd(g00.imag());
  const __m256d r01 = _mm256_set1_pd(g01.real()), i01 = _mm256_set1_pd(g01.imag());
  const __m256d r10 = _mm256_set1_pd(g10.real()), i10 = _mm256_set1_pd(g10.imag());
  const __m256d r11 = _mm256_set1_pd(g11.real()), i11 = _mm256_set1_pd(g11.imag());
  const std::size_t len2 = len & ~std::size_t{1};
  std::size_t j = 0;
  for (; j < len2; j += 2) {
    const __m256d xv = load2(x + j);
    const __m256d yv = load2(y + j);
    store2(x + j, _mm256_add_pd(cmul(r00, i00, xv), cmul(r01, i01, yv)));
    store2(y + j, _mm256_add_pd(cmul(r10, i10, xv), cmul(r11, i11, yv)));
  }
  for (; j < len; ++j) {
    const cplx xj = x[j];
    const cplx yj = y[j];
    x[j] = g00 * xj + g01 * yj;
    y[j] = g10 * xj + g11 * yj;
  }
}

void scale_columns_avx2(std::size_t m, std::size_t n, const cplx* a, const double* d, cplx* out) {
  const std::size_t n2 = n & ~std::size_t{1};
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * n;
    cplx* orow = out + i * n;
    std::size_t j = 0;
    for (; j < n2; j += 2) {
      const __m256d dv = _mm256_set_pd(d[j + 1], d[j + 1], d[j], d[j]);
      store2(orow + j, _mm256_mul_pd(load2(arow + j), dv));
    }
    for (; j < n; ++j) orow[j] = arow[j] * d[j];
  }
}

double sum_abs2_avx2(const cplx* x, std::size_t len) {
  const std::size_t len2 = len & ~std::size_t{1};
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i < len2; i += 2) {
    const __m256d v = load2(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  double s = hsum(acc);
  for (; i < len; ++i) s += std::norm(x[i]);
  return s;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2",           gemm_avx2,          gemm_adjoint_avx2,
                                 rotate_rows_avx2, scale_columns_avx2, sum_abs2_avx2};
  return table;
}

}  // namespace golden_bounds::kernels::detail

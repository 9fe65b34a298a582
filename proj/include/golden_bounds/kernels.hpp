#pragma once

// Data-parallel inner loops behind the dense complex matrix code.
//
// Every kernel has a portable scalar reference implementation; an AVX2/FMA
// variant is compiled on x86-64 and selected at runtime when the CPU supports
// it. Setting GOLDEN_BOUNDS_KERNELS=scalar forces the reference path.
//
// Matrices are dense, row-major, interleaved std::complex<double>.

#include <complex>
#include <cstddef>
#include <string_view>

namespace golden_bounds::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // c (m x n) = a (m x k) * b (k x n)
  void (*gemm)(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b, cplx* c);

  // c (m x n) = a (m x k) * b^H, where b is n x k
  void (*gemm_adjoint)(std::size_t m, std::size_t k, std::size_t n, const cplx* a, const cplx* b,
                       cplx* c);

  // [x; y] <- [g00 g01; g10 g11] [x; y], elementwise over len entries
  void (*rotate_rows)(cplx* x, cplx* y, std::size_t len, cplx g00, cplx g01, cplx g10, cplx g11);

  // out[i][j] = a[i][j] * d[j] for an m x n matrix
  void (*scale_columns)(std::size_t m, std::size_t n, const cplx* a, const double* d, cplx* out);

  // sum of |x_i|^2
  double (*sum_abs2)(const cplx* x, std::size_t len);
};

const KernelTable& scalar();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2();

/// The table used by the library; chosen once per process.
const KernelTable& active();

}  // namespace golden_bounds::kernels

#include <cstdlib>
#include <string_view>

#include "golden_bounds/kernels.hpp"

namespace golden_bounds::kernels {

#if defined(GOLDEN_BOUNDS_HAVE_AVX2)
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2() {
#if defined(GOLDEN_BOUNDS_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* forced = std::getenv("GOLDEN_BOUNDS_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return scalar();
    if (const KernelTable* simd = avx2()) return *simd;
    return scalar();
  }();
  return chosen;
}

}  // namespace golden_bounds::kernels

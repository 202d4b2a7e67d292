#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace symcoupling::kernels {

const KernelTable* avx2_kernels() {
#if defined(SYMCOUPLING_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(SYMCOUPLING_HAVE_NEON)
  return &detail::neon_table();
#else
  return nullptr;
#endif
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* env = std::getenv("SYMCOUPLING_SIMD");
    std::string_view want = env ? env : "";
    if (want == "scalar") return &scalar_kernels();
    if (want == "avx2" && avx2_kernels()) return avx2_kernels();
    if (want == "neon" && neon_kernels()) return neon_kernels();
    if (const auto* k = avx2_kernels()) return k;
    if (const auto* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace symcoupling::kernels

#include "prestab/relcore/kernels.hpp"

#include "kernels_internal.hpp"

namespace prestab::kernels {

  namespace {
    bool cpu_has_avx2() {
#if defined(PRESTAB_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    }
  }  // namespace

  KernelTable const* avx2() {
#ifdef PRESTAB_HAVE_AVX2_KERNELS
    static bool const supported = cpu_has_avx2();
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
  }

  KernelTable const& active() {
    static KernelTable const& chosen = avx2() != nullptr ? *avx2() : scalar();
    return chosen;
  }

}  // namespace prestab::kernels

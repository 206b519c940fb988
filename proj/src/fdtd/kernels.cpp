#include <descent/fdtd/kernels.hpp>

#include <cstdlib>
#include <cstring>

namespace descent::fdtd {

#if DESCENT_HAVE_AVX2
const Kernels& avx2_kernels_impl();

bool avx2_available() { return __builtin_cpu_supports("avx2"); }

const Kernels& avx2_kernels() { return avx2_available() ? avx2_kernels_impl() : scalar_kernels(); }
#else
bool avx2_available() { return false; }

const Kernels& avx2_kernels() { return scalar_kernels(); }
#endif

const Kernels& active_kernels() {
  static const Kernels& chosen = []() -> const Kernels& {
    if (const char* env = std::getenv("DESCENT_KERNELS")) {
      if (std::strcmp(env, "scalar") == 0) return scalar_kernels();
      if (std::strcmp(env, "avx2") == 0) return avx2_kernels();
    }
    return avx2_kernels();
  }();
  return chosen;
}

}  // namespace descent::fdtd

#ifndef DESCENT_FDTD_KERNELS_HPP
#define DESCENT_FDTD_KERNELS_HPP

#include <cstddef>

namespace descent::fdtd {

// Row primitives behind the grid update loops. All variants must produce
// bit-identical results: the elementwise kernels perform the same operation
// order per element, and the reductions use a fixed four-accumulator tree
// (lane sums combined left to right) in every implementation.
struct Kernels {
  const char* name;

  // out[i] += k * ((a[i] - b[i]) - (c[i] - d[i]))
  void (*curl_accum_row)(double* out, const double* a, const double* b, const double* c,
                         const double* d, double k, std::size_t n);

  // sum of x[i]^2
  double (*sum_squares)(const double* x, std::size_t n);

  // sum of x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);

  // max over i of |(a[i]-b[i]) + (c[i]-d[i]) + (e[i]-f[i])|
  double (*max_abs_div3)(const double* a, const double* b, const double* c, const double* d,
                         const double* e, const double* f, std::size_t n);
};

const Kernels& scalar_kernels();

// Present only when compiled in and supported by the running CPU; falls back
// to the scalar table otherwise.
const Kernels& avx2_kernels();
bool avx2_available();

// AVX2 when available; the DESCENT_KERNELS environment variable ("scalar" or
// "avx2") overrides the choice at first use.
const Kernels& active_kernels();

}  // namespace descent::fdtd

#endif

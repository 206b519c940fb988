// AVX2 variants of the row primitives. Compiled with -mavx2 only; entered
// via the dispatch table after a runtime CPU check. No FMA is used so every
// lane performs the same rounding sequence as the scalar kernels.

#include <descent/fdtd/kernels.hpp>

#include <cmath>
#include <immintrin.h>

namespace descent::fdtd {

namespace {

void curl_accum_row_avx2(double* out, const double* a, const double* b, const double* c,
                         const double* d, double k, std::size_t n) {
  const __m256d vk = _mm256_set1_pd(k);
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d ab = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    const __m256d cd = _mm256_sub_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
    const __m256d t = _mm256_mul_pd(vk, _mm256_sub_pd(ab, cd));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), t));
  }
  for (std::size_t i = main; i < n; ++i) {
    out[i] += k * ((a[i] - b[i]) - (c[i] - d[i]));
  }
}

double combine_lanes(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return ((lane[0] + lane[1]) + lane[2]) + lane[3];
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  double sum = combine_lanes(acc);
  for (std::size_t i = main; i < n; ++i) sum += x[i] * x[i];
  return sum;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  double sum = combine_lanes(acc);
  for (std::size_t i = main; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

double max_abs_div3_avx2(const double* a, const double* b, const double* c, const double* d,
                         const double* e, const double* f, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d best = _mm256_setzero_pd();
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    __m256d v = _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    v = _mm256_add_pd(v, _mm256_sub_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i)));
    v = _mm256_add_pd(v, _mm256_sub_pd(_mm256_loadu_pd(e + i), _mm256_loadu_pd(f + i)));
    best = _mm256_max_pd(best, _mm256_andnot_pd(sign_mask, v));
  }
  alignas(32) double lane[4];
  _mm256_store_pd(lane, best);
  double out = lane[0];
  for (int l = 1; l < 4; ++l) {
    if (lane[l] > out) out = lane[l];
  }
  for (std::size_t i = main; i < n; ++i) {
    const double v = std::fabs((a[i] - b[i]) + (c[i] - d[i]) + (e[i] - f[i]));
    if (v > out) out = v;
  }
  return out;
}

}  // namespace

const Kernels& avx2_kernels_impl() {
  static const Kernels k{"avx2", curl_accum_row_avx2, sum_squares_avx2, dot_avx2, max_abs_div3_avx2};
  return k;
}

}  // namespace descent::fdtd

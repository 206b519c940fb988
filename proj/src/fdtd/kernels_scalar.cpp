#include <descent/fdtd/kernels.hpp>

#include <cmath>

namespace descent::fdtd {

namespace {

void curl_accum_row_scalar(double* out, const double* a, const double* b, const double* c,
                           const double* d, double k, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] += k * ((a[i] - b[i]) - (c[i] - d[i]));
  }
}

// Reductions accumulate into four interleaved lanes and combine them left to
// right, matching the vector variants exactly.
double sum_squares_scalar(const double* x, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    acc[0] += x[i] * x[i];
    acc[1] += x[i + 1] * x[i + 1];
    acc[2] += x[i + 2] * x[i + 2];
    acc[3] += x[i + 3] * x[i + 3];
  }
  double sum = ((acc[0] + acc[1]) + acc[2]) + acc[3];
  for (std::size_t i = main; i < n; ++i) sum += x[i] * x[i];
  return sum;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t main = n - n % 4;
  for (std::size_t i = 0; i < main; i += 4) {
    acc[0] += x[i] * y[i];
    acc[1] += x[i + 1] * y[i + 1];
    acc[2] += x[i + 2] * y[i + 2];
    acc[3] += x[i + 3] * y[i + 3];
  }
  double sum = ((acc[0] + acc[1]) + acc[2]) + acc[3];
  for (std::size_t i = main; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

double max_abs_div3_scalar(const double* a, const double* b, const double* c, const double* d,
                           const double* e, const double* f, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = std::fabs((a[i] - b[i]) + (c[i] - d[i]) + (e[i] - f[i]));
    if (v > best) best = v;
  }
  return best;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", curl_accum_row_scalar, sum_squares_scalar, dot_scalar,
                         max_abs_div3_scalar};
  return k;
}

}  // namespace descent::fdtd

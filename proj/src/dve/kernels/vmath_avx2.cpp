// Compiled with -mavx2 -mfma; entered only after the runtime CPU check.

#include "dve/kernels/avx2_math.hpp"
#include "dve/kernels/vmath.hpp"

#include <cmath>

namespace dve::kernels::detail {

void exp_batch_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, avx2::exp_pd(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double buf[4] = {0, 0, 0, 0};
    for (std::size_t j = i; j < n; ++j) buf[j - i] = x[j];
    alignas(32) double out[4];
    _mm256_store_pd(out, avx2::exp_pd(_mm256_load_pd(buf)));
    for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
  }
}

void log_batch_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, avx2::log_pd(_mm256_loadu_pd(x + i)));
  if (i < n) {
    alignas(32) double buf[4] = {1, 1, 1, 1};
    for (std::size_t j = i; j < n; ++j) buf[j - i] = x[j];
    alignas(32) double out[4];
    _mm256_store_pd(out, avx2::log_pd(_mm256_load_pd(buf)));
    for (std::size_t j = i; j < n; ++j) y[j] = out[j - i];
  }
}

}  // namespace dve::kernels::detail

#include "dve/kernels/vmath.hpp"

#include <cmath>

#include "dve/kernels/dispatch.hpp"

namespace dve::kernels {

namespace detail {

void exp_batch_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

void log_batch_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log(x[i]);
}

}  // namespace detail

void exp_batch(const double* x, double* y, std::size_t n) {
#ifdef DVE_HAVE_AVX2
  if (simd::active() == simd::Path::avx2) {
    detail::exp_batch_avx2(x, y, n);
    return;
  }
#endif
  detail::exp_batch_scalar(x, y, n);
}

void log_batch(const double* x, double* y, std::size_t n) {
#ifdef DVE_HAVE_AVX2
  if (simd::active() == simd::Path::avx2) {
    detail::log_batch_avx2(x, y, n);
    return;
  }
#endif
  detail::log_batch_scalar(x, y, n);
}

}  // namespace dve::kernels

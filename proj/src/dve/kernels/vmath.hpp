#pragma once

#include <cstddef>

namespace dve::kernels {

// Batched elementary transcendentals behind the SIMD dispatch. Domain
// contract: exp for x in [-745, 709] (clamped outside), log for strictly
// positive finite x. Scalar reference path is the libm call; the AVX2 path is
// equivalence-tested against it to < 5e-15 relative.
void exp_batch(const double* x, double* y, std::size_t n);
void log_batch(const double* x, double* y, std::size_t n);

namespace detail {
void exp_batch_scalar(const double* x, double* y, std::size_t n);
void log_batch_scalar(const double* x, double* y, std::size_t n);
#ifdef DVE_HAVE_AVX2
void exp_batch_avx2(const double* x, double* y, std::size_t n);
void log_batch_avx2(const double* x, double* y, std::size_t n);
#endif
}  // namespace detail

}  // namespace dve::kernels

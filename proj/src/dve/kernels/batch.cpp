#include "dve/kernels/batch.hpp"

#include "dve/kernels/dispatch.hpp"

namespace dve::kernels {

#ifdef DVE_HAVE_AVX2
#define DVE_DISPATCH(fn, ...)                                            \
  do {                                                                   \
    if (simd::active() == simd::Path::avx2) return detail::fn##_avx2(__VA_ARGS__); \
    return detail::fn##_scalar(__VA_ARGS__);                             \
  } while (0)
#else
#define DVE_DISPATCH(fn, ...) return detail::fn##_scalar(__VA_ARGS__)
#endif

double eta_sum(double kappa, const double* t, std::size_t n) { DVE_DISPATCH(eta_sum, kappa, t, n); }

void eta_batch(double kappa, const double* t, double* out, std::size_t n) {
  DVE_DISPATCH(eta_batch, kappa, t, out, n);
}

void cutoff_batch(CutoffKind kind, double rho, const double* x, double* phi, std::size_t n) {
  DVE_DISPATCH(cutoff_batch, kind, rho, x, phi, n);
}

void symbol_weights(CutoffKind kind, double rho, double scale, const double* e2, double* half_phi,
                    double* w, std::size_t n) {
  DVE_DISPATCH(symbol_weights, kind, rho, scale, e2, half_phi, w, n);
}

double compensated_sum(const double* x, std::size_t n) { DVE_DISPATCH(compensated_sum, x, n); }

#undef DVE_DISPATCH

}  // namespace dve::kernels

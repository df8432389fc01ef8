#pragma once

#include <cstddef>

#include "dve/common.hpp"

namespace dve::kernels {

// Batched inner-loop arithmetic with scalar reference implementations and
// AVX2 variants selected at runtime (see dispatch.hpp). Scalar and SIMD paths
// are equivalence-tested; a given binary on a given host always takes the
// same path, keeping repeated runs bit-identical.

// sum_i eta_kappa(t[i]); values outside (0,1) contribute zero.
double eta_sum(double kappa, const double* t, std::size_t n);

// out[i] = eta_kappa(t[i])
void eta_batch(double kappa, const double* t, double* out, std::size_t n);

// Cutoff values phi(x[i]) for x >= 0.
void cutoff_batch(CutoffKind kind, double rho, const double* x, double* phi, std::size_t n);

// Dirac symbol weights on a momentum grid. Input e2[i] = |k|^2 + mu^2; output
// half_phi[i] = phi(scale*E)/2 and w[i] = phi(scale*E)/(2E) with E = sqrt(e2).
// Where E == 0 (the symbol's singular point) w is set to 0, which realizes the
// documented convention value phi(0)/2 * identity for that node.
void symbol_weights(CutoffKind kind, double rho, double scale, const double* e2, double* half_phi,
                    double* w, std::size_t n);

// Neumaier-compensated sum; deterministic fixed-order reduction.
double compensated_sum(const double* x, std::size_t n);

namespace detail {
double eta_sum_scalar(double kappa, const double* t, std::size_t n);
void eta_batch_scalar(double kappa, const double* t, double* out, std::size_t n);
void cutoff_batch_scalar(CutoffKind kind, double rho, const double* x, double* phi, std::size_t n);
void symbol_weights_scalar(CutoffKind kind, double rho, double scale, const double* e2,
                           double* half_phi, double* w, std::size_t n);
double compensated_sum_scalar(const double* x, std::size_t n);
#ifdef DVE_HAVE_AVX2
double eta_sum_avx2(double kappa, const double* t, std::size_t n);
void eta_batch_avx2(double kappa, const double* t, double* out, std::size_t n);
void cutoff_batch_avx2(CutoffKind kind, double rho, const double* x, double* phi, std::size_t n);
void symbol_weights_avx2(CutoffKind kind, double rho, double scale, const double* e2,
                         double* half_phi, double* w, std::size_t n);
double compensated_sum_avx2(const double* x, std::size_t n);
#endif
}  // namespace detail

}  // namespace dve::kernels

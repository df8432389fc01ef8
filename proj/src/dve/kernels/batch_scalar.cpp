#include <cmath>

#include "dve/entropy/eta.hpp"
#include "dve/kernels/batch.hpp"

namespace dve::kernels::detail {

double eta_sum_scalar(double kappa, const double* t, std::size_t n) {
  // Neumaier accumulation: entropy sums over thousands of eigenvalues must not
  // depend on summation luck.
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = eta(kappa, t[i]);
    const double y = s + v;
    c += (std::abs(s) >= std::abs(v)) ? (s - y) + v : (v - y) + s;
    s = y;
  }
  return s + c;
}

void eta_batch_scalar(double kappa, const double* t, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = eta(kappa, t[i]);
}

void cutoff_batch_scalar(CutoffKind kind, double rho, const double* x, double* phi,
                         std::size_t n) {
  switch (kind) {
    case CutoffKind::exponential:
      for (std::size_t i = 0; i < n; ++i) phi[i] = std::exp(-x[i]);
      break;
    case CutoffKind::gaussian:
      for (std::size_t i = 0; i < n; ++i) phi[i] = std::exp(-x[i] * x[i]);
      break;
    case CutoffKind::rational:
      for (std::size_t i = 0; i < n; ++i) phi[i] = std::pow(1.0 + x[i], -rho);
      break;
    case CutoffKind::sharp_one:
      for (std::size_t i = 0; i < n; ++i) phi[i] = 1.0;
      break;
  }
}

void symbol_weights_scalar(CutoffKind kind, double rho, double scale, const double* e2,
                           double* half_phi, double* w, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double e = std::sqrt(e2[i]);
    w[i] = scale * e;  // stage the cutoff argument
    half_phi[i] = e;
  }
  cutoff_batch_scalar(kind, rho, w, w, n);  // w <- phi(scale*E)
  for (std::size_t i = 0; i < n; ++i) {
    const double e = half_phi[i];
    const double p = w[i];
    half_phi[i] = 0.5 * p;
    w[i] = e > 0.0 ? 0.5 * p / e : 0.0;
  }
}

double compensated_sum_scalar(const double* x, std::size_t n) {
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    const double y = s + v;
    c += (std::abs(s) >= std::abs(v)) ? (s - y) + v : (v - y) + s;
    s = y;
  }
  return s + c;
}

}  // namespace dve::kernels::detail

#pragma once

#include <cmath>

#include "dve/common.hpp"

namespace dve {

// Renyi order kappa > 0. kappa = 1 is the von Neumann case; gamma_exponent()
// is the Hoelder exponent min(kappa, 1) carried as derived metadata.
struct RenyiOrder {
  double kappa = 1.0;

  static RenyiOrder of(double k) {
    if (!(k > 0.0)) throw InvalidArgument("RenyiOrder: kappa must be positive");
    return RenyiOrder{k};
  }
  double gamma_exponent() const { return kappa < 1.0 ? kappa : 1.0; }
};

// Renyi entropy function, extended by zero outside (0,1). Total on the reals.
// For |kappa-1| <= kKappaSwitch the kappa=1 branch is evaluated to avoid the
// (1-kappa)^{-1} cancellation.
inline double eta(double kappa, double t) {
  if (!(t > 0.0) || !(t < 1.0)) return 0.0;
  if (std::abs(kappa - 1.0) <= kKappaSwitch) {
    return -t * std::log(t) - (1.0 - t) * std::log1p(-t);
  }
  const double p = std::pow(t, kappa) + std::pow(1.0 - t, kappa);
  return std::log(p) / (1.0 - kappa);
}

inline double eta(const RenyiOrder& order, double t) { return eta(order.kappa, t); }

// Closed form of eta'' on (0,1); used for the concavity constant instead of
// numerical differentiation of eta, which cancels catastrophically near the
// endpoints.
double eta_second_derivative(double kappa, double t);

// k0 = -sup_{(0,1)} eta_kappa''(t), for kappa in (0, 2]. Exactly 4 at kappa=1.
// kappa > 2 is refused: the positivity theory is not established there.
double concavity_constant(const RenyiOrder& order);

}  // namespace dve

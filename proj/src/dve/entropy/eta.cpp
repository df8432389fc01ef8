#include "dve/entropy/eta.hpp"

#include <algorithm>
#include <vector>

namespace dve {

double eta_second_derivative(double kappa, double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidArgument("eta_second_derivative: t must be in (0,1)");
  if (std::abs(kappa - 1.0) <= kKappaSwitch) return -1.0 / (t * (1.0 - t));
  const double u = 1.0 - t;
  const double num = -kappa * std::pow(t * u, kappa - 2.0) -
                     kappa / (1.0 - kappa) * std::pow(std::pow(t, kappa - 1.0) - std::pow(u, kappa - 1.0), 2.0);
  const double den = std::pow(std::pow(t, kappa) + std::pow(u, kappa), 2.0);
  return num / den;
}

namespace {

// Graded scan grid on (0, 1/2]; eta'' is symmetric about 1/2.
std::vector<double> concavity_grid() {
  std::vector<double> g;
  const int n_log = 60000, n_lin = 60000;
  g.reserve(n_log + n_lin);
  for (int i = 0; i < n_log; ++i) {
    const double e = -14.0 + 14.0 * (static_cast<double>(i) + 0.5) / n_log;  // 1e-14 .. ~1
    const double t = std::pow(10.0, e) * 0.5;
    if (t < 0.5) g.push_back(t);
  }
  for (int i = 1; i <= n_lin; ++i) g.push_back(0.5 * static_cast<double>(i) / n_lin);
  std::sort(g.begin(), g.end());
  return g;
}

}  // namespace

double concavity_constant(const RenyiOrder& order) {
  const double kappa = order.kappa;
  if (!(kappa > 0.0)) throw InvalidArgument("concavity_constant: kappa must be positive");
  if (kappa > 2.0 + 1e-12)
    throw UnsupportedOrderError("concavity_constant: kappa > 2 is outside the established range");
  if (std::abs(kappa - 1.0) <= kKappaSwitch) return 4.0;

  static const std::vector<double> grid = concavity_grid();
  double best_t = 0.5, best = -std::numeric_limits<double>::infinity();
  for (const double t : grid) {
    const double v = eta_second_derivative(kappa, t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  // local refinement by golden-section around the best grid point
  const double span = 1.0 / 60000.0;
  double a = std::max(best_t - span, 1e-15);
  double b = std::min(best_t + span, 0.5);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
    const double c = b - gr * (b - a), d = a + gr * (b - a);
    if (eta_second_derivative(kappa, c) > eta_second_derivative(kappa, d))
      b = d;
    else
      a = c;
  }
  best = std::max(best, eta_second_derivative(kappa, 0.5 * (a + b)));
  return std::max(0.0, -best);
}

}  // namespace dve

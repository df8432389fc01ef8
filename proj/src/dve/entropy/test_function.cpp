#include "dve/entropy/test_function.hpp"

#include "dve/kernels/batch.hpp"

namespace dve {

double TestFunction::sum(const double* t, std::size_t n) const {
  if (kind == Kind::renyi) return kernels::eta_sum(kappa, t, n);
  double s = 0.0, c = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = 0.5 * t[i] * t[i];
    const double y = s + v;
    c += (s >= v) ? (s - y) + v : (v - y) + s;
    s = y;
  }
  return s + c;
}

}  // namespace dve

#pragma once

#include <cstddef>

#include "dve/entropy/eta.hpp"

namespace dve {

// The scalar function traced against finite sections: either a Renyi entropy
// function eta_kappa or the quadratic t^2/2.
//
// Sign convention (fixed project-wide, see widom/coefficient.hpp): the
// quadratic mode evaluates f(t) = +t^2/2, so the two-edge section trace
// m_pair(f0) converges to minus the Hilbert-Schmidt cross norm and the
// per-edge coefficient entering the positivity bound is |m_pair|/2.
struct TestFunction {
  enum class Kind { renyi, quadratic };

  Kind kind = Kind::renyi;
  double kappa = 1.0;

  static TestFunction renyi(double kappa) {
    RenyiOrder::of(kappa);
    return TestFunction{Kind::renyi, kappa};
  }
  static TestFunction f0() { return TestFunction{Kind::quadratic, 0.0}; }

  double operator()(double t) const {
    return kind == Kind::renyi ? eta(kappa, t) : 0.5 * t * t;
  }

  // sum_i f(t_i); the Renyi branch dispatches to the batched SIMD kernel.
  double sum(const double* t, std::size_t n) const;

  const char* name() const { return kind == Kind::renyi ? "eta" : "f0"; }
};

}  // namespace dve

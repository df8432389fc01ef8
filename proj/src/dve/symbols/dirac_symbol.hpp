#pragma once

#include <array>

#include "dve/spin/spinor_matrix.hpp"
#include "dve/symbols/cutoff.hpp"

namespace dve {

using Vec3 = std::array<double, 3>;

// Real Clifford coefficients of a symbol value:
//   value = a*1 + sum_b b[b] gamma^b gamma^0 + d gamma^0.
// The eigenvalues are a +/- sqrt(|b|^2 + d^2), each with multiplicity two.
struct SymbolCoeffs {
  double a = 0.0;
  std::array<double, 3> b{0.0, 0.0, 0.0};
  double d = 0.0;

  std::array<double, 2> eigenvalue_pair() const;  // {lo, hi}
};

SpinorMatrix to_matrix(const SymbolCoeffs& c);

// Momentum-space projection symbol onto the negative Dirac frequencies,
// optionally multiplied by the cutoff factor phi(eps*sqrt(k^2+m^2)).
// Singular point: k = 0 with m = 0 (the direction k/|k| is undefined there).
SymbolCoeffs momentum_symbol_coeffs(const DiracParams& p, const Vec3& k, bool regularized = true);
SpinorMatrix momentum_symbol(const DiracParams& p, const Vec3& k, bool regularized = true);

// Rescaled family xi -> P^(eps)(xi/eps); eps = 0 gives the limit symbol.
// Singular point: xi = 0 with eps*m = 0.
SymbolCoeffs rescaled_symbol_coeffs(const DiracParams& p, const Vec3& xi);
SpinorMatrix rescaled_symbol(const DiracParams& p, const Vec3& xi);

// One-dimensional restriction along e3 with transverse representative on
// `axis` (0 -> (s,0,t), 1 -> (0,s,t)). Rotation covariance makes the choice
// immaterial; axis 1 exists to test exactly that.
struct LineSymbol {
  double s = 0.0;  // transverse radius |xi_hat|
  DiracParams params;
  int axis = 0;

  // effective decay rate of the 1D kernel (analyticity-strip estimate)
  double strip_width() const;
  Vec3 point(double t) const;
};

SpinorMatrix line_symbol(const LineSymbol& line, double t);

// Scalar profiles of the line symbol at parameter t:
//   A(t) = a(t)*1 + b(t) gamma^axis gamma^0 + c(t) gamma^3 gamma^0 + d(t) gamma^0
// with a,b,d even in t and c odd. phi_val carries phi(q(t)).
struct LineProfiles {
  double a, b, c, d;
  double phi_val;
};
LineProfiles line_profiles(const LineSymbol& line, double t);

}  // namespace dve

#pragma once

#include <string>

#include "dve/widom/profile.hpp"

namespace dve {

// Sign conventions, fixed here for the whole project:
//  * m_pair(s) = tr f(C_X) - X rho_f is the TWO-edge boundary value; the
//    per-edge transverse profile is M(s) = m_pair(s)/2 (the two edges carry
//    equal integrated weight).
//  * The quadratic mode evaluates f(t) = +t^2/2, so m_pair(f0) is negative
//    and |m_pair(f0)| equals the two-edge Hilbert-Schmidt cross norm. The
//    coefficient entering the quadratic lower bound is therefore built from
//    |m_pair(f0)|/2 per edge and is nonnegative.
//  * The radial reduction (in-plane rotation invariance) gives
//    M_coefficient = (2pi)^{-1} int_0^inf M(s) s ds.

struct WidomCoefficient {
  double value = 0.0;
  double error = 0.0;
};

// Trapezoid on the graded grid, with propagated per-point errors, a coarse-
// grid quadrature estimate, and head/tail closure terms folded into `error`.
// For kappa in (0,2) a nonpositive result beyond its error bars is a hard
// failure. Coverage of the tail (last point contributing < 0.5% of the total)
// is enforced.
WidomCoefficient integrate_mkappa(const MProfile& profile);

struct PositivityReport {
  bool ok = false;
  bool f0_positive = false;
  double margin = 0.0;        // coefficient - k0 * f0_coefficient + combined error
  double combined_error = 0.0;
  std::string detail;
};

struct WidomResult {
  double kappa = 1.0;
  DiracParams params;
  MProfile eta_profile;
  MProfile f0_profile;
  WidomCoefficient coefficient;     // M_kappa^(eps)
  WidomCoefficient f0_coefficient;  // M(f0) >= 0, per the sign convention above
  double k0 = 0.0;
  PositivityReport positivity;
};

struct WidomSettings {
  SectionSettings section;
  ProfileGrid grid;
  int jobs = 1;
  int axis = 0;
  bool with_f0 = true;
};

WidomResult compute_widom(const DiracParams& p, double kappa, const WidomSettings& set = {});

// kappa in (0,2]: checks coefficient >= k0 * f0_coefficient - combined error
// and f0_coefficient > 0. Violations come back as a failed report, not an
// exception; kappa > 2 is refused.
PositivityReport positivity_check(const WidomResult& r);

}  // namespace dve

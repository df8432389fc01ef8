#pragma once

#include <string>

#include "dve/common.hpp"

namespace dve {

// Radially symmetric ultraviolet cutoff phi: R+ -> [0,1] with phi(0) = 1.
// Three production families (exponential, gaussian, rational with rho > 3)
// plus the sharp phi == 1 lattice test mode. The [0,1] bound is a deliberate
// narrowing: it guarantees symbol spectra inside [0,1], which the entropy
// evaluation relies on.
struct CutoffSpec {
  CutoffKind kind = CutoffKind::exponential;
  double rho = 4.0;      // decay exponent, used by the rational family only
  double support = 1.0;  // dilation of the profile: phi(t) = base(t / support)

  static CutoffSpec exponential() { return {CutoffKind::exponential, 0.0, 1.0}; }
  static CutoffSpec gaussian() { return {CutoffKind::gaussian, 0.0, 1.0}; }
  static CutoffSpec rational(double rho);
  static CutoffSpec sharp_one() { return {CutoffKind::sharp_one, 0.0, 1.0}; }

  CutoffSpec scaled(double lambda) const;  // support multiplied by lambda

  double operator()(double t) const;

  // smallest T with phi(t) <= floor for all t >= T; infinite for sharp_one
  double support_radius(double floor) const;
  // integral bound int_T^inf phi(t) dt
  double tail_integral(double T) const;

  void validate() const;
  std::string name() const;
  bool has_decay() const { return kind != CutoffKind::sharp_one; }
};

CutoffKind cutoff_kind_from_name(const std::string& s);

// Dimensionless Dirac parameters (reference length set to 1): mass m >= 0,
// regularization length epsilon >= 0 and the cutoff. epsilon = 0 is only
// meaningful for the rescaled/limit symbol family.
struct DiracParams {
  double mass = 0.0;
  double epsilon = 0.0;
  CutoffSpec cutoff = CutoffSpec::exponential();

  void validate() const;
};

}  // namespace dve

#include "dve/symbols/dirac_symbol.hpp"

#include <cmath>

namespace dve {

std::array<double, 2> SymbolCoeffs::eigenvalue_pair() const {
  const double r = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + d * d);
  return {a - r, a + r};
}

SpinorMatrix to_matrix(const SymbolCoeffs& c) {
  return clifford_combination(c.a, {cplx(c.b[0]), cplx(c.b[1]), cplx(c.b[2])}, cplx(c.d));
}

SymbolCoeffs momentum_symbol_coeffs(const DiracParams& p, const Vec3& k, bool regularized) {
  p.validate();
  const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  const double e = std::sqrt(k2 + p.mass * p.mass);
  if (e == 0.0)
    throw SingularPointError("momentum symbol is undefined at k = 0 for a massless field");
  const double phi = regularized ? p.cutoff(p.epsilon * e) : 1.0;
  SymbolCoeffs c;
  c.a = 0.5 * phi;
  const double w = 0.5 * phi / e;
  for (int i = 0; i < 3; ++i) c.b[i] = k[i] * w;
  c.d = -p.mass * w;
  return c;
}

SpinorMatrix momentum_symbol(const DiracParams& p, const Vec3& k, bool regularized) {
  return to_matrix(momentum_symbol_coeffs(p, k, regularized));
}

SymbolCoeffs rescaled_symbol_coeffs(const DiracParams& p, const Vec3& xi) {
  p.validate();
  const double mu = p.epsilon * p.mass;
  const double xi2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
  const double q = std::sqrt(xi2 + mu * mu);
  if (q == 0.0)
    throw SingularPointError("rescaled symbol is undefined at xi = 0 when eps*m = 0");
  const double phi = p.cutoff(q);
  SymbolCoeffs c;
  c.a = 0.5 * phi;
  const double w = 0.5 * phi / q;
  for (int i = 0; i < 3; ++i) c.b[i] = xi[i] * w;
  c.d = -mu * w;
  return c;
}

SpinorMatrix rescaled_symbol(const DiracParams& p, const Vec3& xi) {
  return to_matrix(rescaled_symbol_coeffs(p, xi));
}

double LineSymbol::strip_width() const {
  const double mu = params.epsilon * params.mass;
  return std::sqrt(s * s + mu * mu);
}

Vec3 LineSymbol::point(double t) const {
  Vec3 xi{0.0, 0.0, t};
  xi[axis == 1 ? 1 : 0] = s;
  return xi;
}

SpinorMatrix line_symbol(const LineSymbol& line, double t) {
  return rescaled_symbol(line.params, line.point(t));
}

LineProfiles line_profiles(const LineSymbol& line, double t) {
  const double mu = line.params.epsilon * line.params.mass;
  const double q = std::sqrt(line.s * line.s + t * t + mu * mu);
  if (q == 0.0)
    throw SingularPointError("line symbol is undefined at s = t = 0 when eps*m = 0");
  const double phi = line.params.cutoff(q);
  const double w = 0.5 * phi / q;
  return LineProfiles{0.5 * phi, line.s * w, t * w, -mu * w, phi};
}

}  // namespace dve

#include "dve/symbols/cutoff.hpp"

#include <cmath>
#include <limits>

namespace dve {

CutoffSpec CutoffSpec::rational(double rho) {
  CutoffSpec s{CutoffKind::rational, rho, 1.0};
  s.validate();
  return s;
}

CutoffSpec CutoffSpec::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw ValidationError("cutoff support scale must be positive");
  CutoffSpec s = *this;
  s.support *= lambda;
  return s;
}

double CutoffSpec::operator()(double t) const {
  t /= support;
  switch (kind) {
    case CutoffKind::exponential:
      return std::exp(-t);
    case CutoffKind::gaussian:
      return std::exp(-t * t);
    case CutoffKind::rational:
      return std::pow(1.0 + t, -rho);
    case CutoffKind::sharp_one:
      return 1.0;
  }
  return 0.0;
}

double CutoffSpec::support_radius(double floor) const {
  switch (kind) {
    case CutoffKind::exponential:
      return support * -std::log(floor);
    case CutoffKind::gaussian:
      return support * std::sqrt(-std::log(floor));
    case CutoffKind::rational:
      return support * (std::pow(floor, -1.0 / rho) - 1.0);
    case CutoffKind::sharp_one:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

double CutoffSpec::tail_integral(double T) const {
  const double u = T / support;
  switch (kind) {
    case CutoffKind::exponential:
      return support * std::exp(-u);
    case CutoffKind::gaussian:
      return support * (u > 0 ? std::exp(-u * u) / (2.0 * u) : 0.8862269254527580);
    case CutoffKind::rational:
      return support * std::pow(1.0 + u, 1.0 - rho) / (rho - 1.0);
    case CutoffKind::sharp_one:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

void CutoffSpec::validate() const {
  if (kind == CutoffKind::rational && !(rho > 3.0))
    throw ValidationError("cutoff.rho must be > 3 for the rational family (got " +
                          std::to_string(rho) + ")");
  if (!(support > 0.0)) throw ValidationError("cutoff.support must be positive");
}

std::string CutoffSpec::name() const {
  switch (kind) {
    case CutoffKind::exponential:
      return "exponential";
    case CutoffKind::gaussian:
      return "gaussian";
    case CutoffKind::rational:
      return "rational";
    case CutoffKind::sharp_one:
      return "sharp_one";
  }
  return "?";
}

CutoffKind cutoff_kind_from_name(const std::string& s) {
  if (s == "exponential") return CutoffKind::exponential;
  if (s == "gaussian") return CutoffKind::gaussian;
  if (s == "rational") return CutoffKind::rational;
  if (s == "sharp_one") return CutoffKind::sharp_one;
  throw ValidationError("unknown cutoff.kind '" + s + "'");
}

void DiracParams::validate() const {
  if (!(mass >= 0.0)) throw ValidationError("mass must be >= 0");
  if (!(epsilon >= 0.0)) throw ValidationError("epsilon must be >= 0");
  cutoff.validate();
}

}  // namespace dve

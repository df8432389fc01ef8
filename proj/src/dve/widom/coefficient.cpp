#include "dve/widom/coefficient.hpp"

#include <algorithm>
#include <cmath>

#include "dve/entropy/eta.hpp"

namespace dve {

namespace {

double point_weight(const MProfile& p, std::size_t i) {
  // per-edge value; the quadratic mode contributes |m_pair|/2
  const double v = p.points[i].m_pair * 0.5;
  return p.f.kind == TestFunction::Kind::quadratic ? std::abs(v) : v;
}

double trapezoid(const MProfile& p, std::size_t stride) {
  double sum = 0.0;
  std::size_t prev = 0;
  for (std::size_t i = stride; i < p.points.size(); i += stride) {
    const double s0 = p.points[prev].s, s1 = p.points[i].s;
    const double f0 = point_weight(p, prev) * s0, f1 = point_weight(p, i) * s1;
    sum += 0.5 * (f0 + f1) * (s1 - s0);
    prev = i;
  }
  return sum;
}

}  // namespace

WidomCoefficient integrate_mkappa(const MProfile& profile) {
  const auto& pts = profile.points;
  if (pts.size() < 4) throw InvalidArgument("integrate_mkappa: profile too short");
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i].s > pts[i - 1].s)) throw InvalidArgument("integrate_mkappa: s grid not increasing");

  const double integral = trapezoid(profile, 1);
  const double coarse = trapezoid(profile, 2);
  const double quad_err = std::abs(integral - coarse) / 3.0;

  // propagated per-point errors with their trapezoid weights
  double prop_err = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double left = i > 0 ? pts[i].s - pts[i - 1].s : 0.0;
    const double right = i + 1 < pts.size() ? pts[i + 1].s - pts[i].s : 0.0;
    prop_err += 0.5 * (left + right) * pts[i].s * 0.5 * pts[i].err;
  }

  // head closure: integrand below s_min estimated by its boundary value
  const double head_est = std::abs(point_weight(profile, 0)) * 0.5 * pts[0].s * pts[0].s;

  // tail coverage: last panel must be a sub-percent correction
  const std::size_t last = pts.size() - 1;
  const double tail_panel = std::abs(point_weight(profile, last)) * pts[last].s *
                            (pts[last].s - pts[last - 1].s);
  const double total = std::abs(integral);
  if (total > 0.0 && tail_panel > 5e-3 * total)
    throw CoverageError("profile tail not covered: last panel contributes " +
                        std::to_string(tail_panel / total) + " of the integral");

  WidomCoefficient out;
  const double inv2pi = 1.0 / (2.0 * M_PI);
  out.value = integral * inv2pi;
  out.error = (quad_err + prop_err + head_est + tail_panel) * inv2pi;

  if (profile.f.kind == TestFunction::Kind::renyi && profile.f.kappa > 0.0 &&
      profile.f.kappa < 2.0) {
    if (out.value <= 0.0 && out.value + out.error < 0.0)
      throw NumericalError("Widom coefficient not strictly positive for kappa in (0,2): " +
                           std::to_string(out.value));
  }
  return out;
}

WidomResult compute_widom(const DiracParams& p, double kappa, const WidomSettings& set) {
  RenyiOrder::of(kappa);
  WidomResult r;
  r.kappa = kappa;
  r.params = p;
  const std::vector<double> grid = make_s_grid(p, set.grid);
  r.eta_profile = m_profile(p, TestFunction::renyi(kappa), grid, set.section, set.jobs, set.axis);
  r.coefficient = integrate_mkappa(r.eta_profile);
  if (set.with_f0) {
    r.f0_profile = m_profile(p, TestFunction::f0(), grid, set.section, set.jobs, set.axis);
    r.f0_coefficient = integrate_mkappa(r.f0_profile);
    if (kappa <= 2.0 + 1e-12) {
      r.k0 = concavity_constant(RenyiOrder::of(kappa));
      r.positivity = positivity_check(r);
    }
  }
  return r;
}

PositivityReport positivity_check(const WidomResult& r) {
  if (!(r.kappa > 0.0) || r.kappa > 2.0 + 1e-12)
    throw UnsupportedOrderError("positivity_check: kappa must lie in (0, 2]");
  PositivityReport rep;
  rep.f0_positive = r.f0_coefficient.value > 0.0;
  rep.combined_error = r.coefficient.error + r.k0 * r.f0_coefficient.error;
  rep.margin = r.coefficient.value - r.k0 * r.f0_coefficient.value + rep.combined_error;
  rep.ok = rep.f0_positive && rep.margin >= 0.0;
  rep.detail = "M_kappa=" + std::to_string(r.coefficient.value) +
               " k0=" + std::to_string(r.k0) + " M_f0=" + std::to_string(r.f0_coefficient.value) +
               " margin=" + std::to_string(rep.margin);
  return rep;
}

}  // namespace dve

#include "dve/cli/checks.hpp"

#include <cmath>
#include <random>

#include "dve/spin/matrix_function.hpp"
#include "dve/symbols/rotation.hpp"

namespace dve::cli {

using nlohmann::json;

std::vector<CheckResult> symbol_algebra_checks(const DiracParams& p, int n_momenta,
                                               int n_rotations, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.5);

  {
    CheckResult c{"gamma_anticommutation", true, {}};
    double worst = 0.0;
    const double metric[4] = {1.0, -1.0, -1.0, -1.0};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        SpinorMatrix anti = gamma(i) * gamma(j) + gamma(j) * gamma(i);
        const double expect = i == j ? 2.0 * metric[i] : 0.0;
        anti -= expect * SpinorMatrix::identity();
        worst = std::max(worst, anti.max_abs());
      }
    c.pass = worst == 0.0;  // entries are exact 0, +-1, +-i
    c.detail["max_residual"] = worst;
    out.push_back(c);
  }

  {
    CheckResult c{"projection_idempotent_trace", true, {}};
    double worst_idem = 0.0, worst_trace = 0.0;
    for (int i = 0; i < n_momenta; ++i) {
      const Vec3 k{gauss(rng), gauss(rng), gauss(rng)};
      const SpinorMatrix pk = momentum_symbol(p, k, /*regularized=*/false);
      worst_idem = std::max(worst_idem, max_abs_diff(pk * pk, pk));
      worst_trace = std::max(worst_trace, std::abs(pk.trace() - cplx(2.0)));
    }
    c.pass = worst_idem < 1e-12 && worst_trace < 1e-12;
    c.detail["max_idempotency_residual"] = worst_idem;
    c.detail["max_trace_residual"] = worst_trace;
    out.push_back(c);
  }

  {
    CheckResult c{"regularized_eigenvalues", true, {}};
    double worst = 0.0;
    for (int i = 0; i < n_momenta; ++i) {
      const Vec3 xi{gauss(rng), gauss(rng), gauss(rng)};
      const SymbolCoeffs coeffs = rescaled_symbol_coeffs(p, xi);
      const double mu = p.epsilon * p.mass;
      const double q = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2] + mu * mu);
      const double phi = p.cutoff(q);
      const SpinorEigenSystem es = spinor_eigh(to_matrix(coeffs));
      const double expect[4] = {0.0, 0.0, phi, phi};
      double sorted[4];
      for (int e = 0; e < 4; ++e) sorted[e] = es.eigenvalues[e];
      std::sort(sorted, sorted + 4);
      double expect_sorted[4] = {expect[0], expect[1], expect[2], expect[3]};
      std::sort(expect_sorted, expect_sorted + 4);
      for (int e = 0; e < 4; ++e) worst = std::max(worst, std::abs(sorted[e] - expect_sorted[e]));
    }
    c.pass = worst < 1e-12;
    c.detail["max_eigenvalue_residual"] = worst;
    out.push_back(c);
  }

  {
    CheckResult c{"rotation_covariance", true, {}};
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    double worst = 0.0;
    for (int i = 0; i < n_rotations; ++i) {
      const Mat3 r = mat3_mul(rotation_z(ang(rng)), mat3_mul(rotation_y(ang(rng) / 2.0),
                                                             rotation_z(ang(rng))));
      const SpinorMatrix q = rotation_spin_matrix(r);
      const SpinorMatrix qadj = q.adjoint();
      // defining property on random vectors
      for (int v = 0; v < 3; ++v) {
        const Vec3 vv{gauss(rng), gauss(rng), gauss(rng)};
        const Vec3 rv = mat3_apply(r, vv);
        SpinorMatrix lhs;
        for (int b = 0; b < 3; ++b) lhs += cplx(rv[b]) * gamma(b + 1);
        lhs = q * lhs * qadj;
        SpinorMatrix rhs;
        for (int b = 0; b < 3; ++b) rhs += cplx(vv[b]) * gamma(b + 1);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
      // symbol covariance A(xi) = Q A(R xi) Q*
      const Vec3 xi{gauss(rng), gauss(rng), gauss(rng)};
      const SpinorMatrix lhs = rescaled_symbol(p, xi);
      const SpinorMatrix rhs = q * rescaled_symbol(p, mat3_apply(r, xi)) * qadj;
      worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    c.pass = worst < 1e-10;
    c.detail["max_covariance_residual"] = worst;
    out.push_back(c);
  }

  return out;
}

CheckResult gaussian_kernel_check(double tol) {
  CheckResult c{"gaussian_kernel_closed_form", true, {}};
  const ScalarLine g{[](double t) { return std::exp(-t * t); }, 9.0};
  const LineOperator op(g);
  double worst = 0.0;
  for (const double u : {0.0, 0.3, 1.0, 2.7, 5.0}) {
    const SpinorMatrix k = op.kernel(u);
    const double expect = std::exp(-u * u / 4.0) / (2.0 * std::sqrt(M_PI));
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(k(i, i) - cplx(expect)));
  }
  c.pass = worst < tol;
  c.detail["max_residual"] = worst;
  c.detail["tolerance"] = tol;
  return c;
}

CheckResult gaussian_hs_check(double tol) {
  CheckResult c{"gaussian_hs_cross_norm", true, {}};
  const ScalarLine g{[](double t) { return std::exp(-t * t); }, 9.0};
  const LineOperator op(g);
  const LineKernelTable table = LineKernelTable::build(op, 0.02, 1200);
  const HsCrossNorm hs = hs_cross_norm(table);
  const double expect = 1.0 / M_PI;
  c.pass = std::abs(hs.value - expect) < tol;
  c.detail["value"] = hs.value;
  c.detail["expected"] = expect;
  c.detail["tolerance"] = tol;
  return c;
}

CheckResult f0_identity_check(const DiracParams& p, const SectionSettings& set,
                              const std::vector<double>& s_list, double tol) {
  CheckResult c{"f0_hs_identity", true, {}};
  json rows = json::array();
  double worst = 0.0;
  for (const double s : s_list) {
    const LineSymbol line{s, p, 0};
    const LineOperator op(line);
    const TestFunction f0 = TestFunction::f0();
    const double rho = op.density(f0);
    const SectionPlan plan = plan_section(line.strip_width(), set);
    const LineKernelTable table = LineKernelTable::build(op, plan.dx, plan.n);
    const SectionTrace tr = section_trace_with_ladder(table, f0, rho, true);
    const HsCrossNorm hs = hs_cross_norm(table);
    const double rel = std::abs(tr.m_pair + hs.value) / hs.value;
    worst = std::max(worst, rel);
    rows.push_back({s, tr.m_pair, hs.value, rel});
  }
  c.pass = worst < tol;
  c.detail["rows"] = rows;
  c.detail["max_relative_defect"] = worst;
  c.detail["tolerance"] = tol;
  return c;
}

CheckResult positivity_quick_check(const DiracParams& p, double kappa, WidomSettings set) {
  CheckResult c{"positivity_chain", true, {}};
  const WidomResult r = compute_widom(p, kappa, set);
  c.pass = r.positivity.ok && r.coefficient.value > 0.0;
  c.detail["coefficient"] = r.coefficient.value;
  c.detail["coefficient_error"] = r.coefficient.error;
  c.detail["f0_coefficient"] = r.f0_coefficient.value;
  c.detail["k0"] = r.k0;
  c.detail["margin"] = r.positivity.margin;
  return c;
}

}  // namespace dve::cli

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dve/wh/section.hpp"

using namespace dve;

namespace {

ScalarLine gaussian_line() {
  return ScalarLine{[](double t) { return std::exp(-t * t); }, 9.0};
}

// independent high-order oracle: composite Simpson with a dense fixed grid
double simpson_transform(const std::function<double(double)>& f, bool odd, double u, double t_max,
                         int n) {
  if (n % 2 == 1) ++n;
  const double h = t_max / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    s += w * f(t) * (odd ? std::sin(u * t) : std::cos(u * t));
  }
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("quadrature sanity: polynomials and a Gaussian") {
  BatchFn sq = [](const double* t, double* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) g[i] = t[i] * t[i];
  };
  CHECK(integrate_adaptive(sq, 0.0, 1.0).value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  BatchFn gauss = [](const double* t, double* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(-t[i] * t[i]);
  };
  CHECK(integrate_adaptive(gauss, 0.0, 10.0).value ==
        doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-13));
  // oscillatory: int_0^inf e^{-t} cos(ut) dt = 1/(1+u^2)
  BatchFn expf = [](const double* t, double* g, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(-t[i]);
  };
  for (const double u : {0.0, 1.0, 7.3, 30.0}) {
    const QuadValue v = oscillatory_transform(expf, Parity::even, u, 40.0);
    CHECK(v.value == doctest::Approx(1.0 / (1.0 + u * u)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("gaussian line kernel reproduces the closed form") {
  const LineOperator op(gaussian_line());
  for (const double u : {0.0, 0.5, 1.0, 2.0, 4.5, -1.3}) {
    const SpinorMatrix k = op.kernel(u);
    const double expect = std::exp(-u * u / 4.0) / (2.0 * std::sqrt(M_PI));
    for (int i = 0; i < 4; ++i) {
      CHECK(std::abs(k(i, i) - cplx(expect)) < 1e-10);
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(std::abs(k(i, j)) < 1e-12);
    }
  }
}

TEST_CASE("line kernel at u = 0 is Hermitian; k(-u) = k(u)^dagger") {
  const DiracParams p{0.7, 0.25, CutoffSpec::exponential()};
  const LineSymbol line{1.0, p, 0};
  const LineOperator op(line);
  const SpinorMatrix k0 = op.kernel(0.0);
  CHECK(k0.hermiticity_defect() < 1e-12);
  for (const double u : {0.3, 1.7}) {
    CHECK(max_abs_diff(op.kernel(-u), op.kernel(u).adjoint()) < 1e-12);
  }
}

TEST_CASE("Dirac line kernel entries against an independent quadrature oracle") {
  const DiracParams p{0.0, 0.0, CutoffSpec::exponential()};
  const LineSymbol line{1.0, p, 0};
  const LineOperator op(line);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> du(0.0, 8.0);
  const auto prof_a = [&](double t) { return line_profiles(line, t).a; };
  const auto prof_b = [&](double t) { return line_profiles(line, t).b; };
  const auto prof_c = [&](double t) { return line_profiles(line, t).c; };
  for (int trial = 0; trial < 10; ++trial) {
    const double u = du(rng);
    const SpinorMatrix k = op.kernel(u);
    const double ahat = simpson_transform(prof_a, false, u, 40.0, 200000) / M_PI;
    const double bhat = simpson_transform(prof_b, false, u, 40.0, 200000) / M_PI;
    const double chat = simpson_transform(prof_c, true, u, 40.0, 200000) / M_PI;
    const SpinorMatrix expect =
        clifford_combination(cplx(ahat), {cplx(bhat), cplx(0.0), cplx(0.0, chat)}, cplx(0.0));
    CHECK(max_abs_diff(k, expect) < 1e-8);
    // the odd-profile part sits in purely imaginary entries of the gamma3
    // gamma0 block; sample one
    CHECK(std::abs(k(0, 2).real()) < 1e-10);
  }
}

TEST_CASE("density: far transverse radius gives zero") {
  const DiracParams p{0.0, 0.0, CutoffSpec::gaussian()};
  const LineSymbol line{7.0, p, 0};  // phi(7) ~ 5e-22
  const LineOperator op(line);
  CHECK(op.density(TestFunction::renyi(1.0)) < 1e-15);
}

TEST_CASE("density integrand is kappa-independent where phi = 1/2") {
  // tr eta_kappa(A(t)) = 2 eta_kappa(phi) = 2 log 2 at phi = 1/2
  const DiracParams p{0.0, 0.0, CutoffSpec::exponential()};
  const LineSymbol line{0.5, p, 0};
  const LineOperator op(line);
  const double t_half = std::sqrt(std::log(2.0) * std::log(2.0) - 0.25);  // q = log 2
  for (const double kappa : {0.4, 1.0, 1.9}) {
    const auto ev = op.symbol_eigenvalues(t_half);
    const double integrand = 2.0 * (eta(kappa, ev[0]) + eta(kappa, ev[1]));
    CHECK(integrand == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("density at s = 0 (massless, exponential cutoff) equals pi/3") {
  // (2pi)^{-1} int_R 2 eta_1(e^{-|t|}) dt = (2/pi) * zeta(2) / ... = pi/3;
  // oracle: 50-digit quadrature of int_0^inf eta_1(e^{-t}) dt = pi^2/6
  const DiracParams p{0.0, 0.0, CutoffSpec::exponential()};
  const LineSymbol line{0.0, p, 0};
  const LineOperator op(line);
  CHECK(op.density(TestFunction::renyi(1.0)) == doctest::Approx(M_PI / 3.0).epsilon(1e-9));
}

TEST_CASE("section spectrum lies in [0,1] up to the clip tolerance") {
  const DiracParams p{0.5, 0.2, CutoffSpec::exponential()};
  const LineSymbol line{0.4, p, 0};
  const LineOperator op(line);
  const LineKernelTable table = LineKernelTable::build(op, 0.15, 300);
  const std::vector<double> w = section_spectrum(table, 300);
  CHECK(w.front() > -1e-8);
  CHECK(w.back() < 1.0 + 1e-8);
}

TEST_CASE("assembled sections are Hermitian by construction") {
  const DiracParams p{0.3, 0.1, CutoffSpec::gaussian()};
  const LineSymbol line{1.2, p, 0};
  const LineOperator op(line);
  const LineKernelTable table = LineKernelTable::build(op, 0.2, 64);
  // blocks satisfy k(-u) = k(u)^dagger entry-exactly
  for (int j = 0; j < 8; ++j) {
    const SpinorMatrix kj = table.at(j);
    CHECK(max_abs_diff(kj.adjoint(), op.kernel(-j * 0.2)) < 1e-12);
  }
}

TEST_CASE("gaussian m_pair(f0) converges to -1/pi and cancels the cross norm") {
  const LineOperator op(gaussian_line());
  const TestFunction f0 = TestFunction::f0();
  const double rho = op.density(f0);
  // rho_{f0} = (2pi)^{-1} int_R 4 * g(t)^2/2 dt = (1/pi) int_R e^{-2t^2} dt = 1/sqrt(2 pi)
  CHECK(rho == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-10));
  const LineKernelTable table = LineKernelTable::build(op, 0.05, 800);  // X = 40
  const SectionTrace tr = section_trace_with_ladder(table, f0, rho);
  CHECK(tr.m_pair == doctest::Approx(-1.0 / M_PI).epsilon(2e-3));
  const HsCrossNorm hs = hs_cross_norm(table);
  CHECK(hs.value == doctest::Approx(1.0 / M_PI).epsilon(1e-4));
  CHECK(std::abs(tr.m_pair + hs.value) / hs.value < 0.01);
}

TEST_CASE("zero symbol gives zero trace difference and zero cross norm") {
  const ScalarLine zero{[](double) { return 0.0; }, 5.0};
  const LineOperator op(zero);
  const LineKernelTable table = LineKernelTable::build(op, 0.1, 100);
  const SectionTrace tr =
      finite_section_trace(table, TestFunction::renyi(1.0), 0.0, 100, true);
  CHECK(std::abs(tr.m_pair) < 1e-12);
  CHECK(hs_cross_norm(table).value < 1e-20);
}

TEST_CASE("Dirac line: cross norm strictly positive, f0 identity holds") {
  const DiracParams p{0.0, 0.0, CutoffSpec::exponential()};
  const LineSymbol line{1.0, p, 0};
  const LineOperator op(line);
  const SectionSettings set;
  const SectionPlan plan = plan_section(line.strip_width(), set);
  const LineKernelTable table = LineKernelTable::build(op, plan.dx, plan.n);
  const HsCrossNorm hs = hs_cross_norm(table);
  CHECK(hs.value > 1e-4);
  const TestFunction f0 = TestFunction::f0();
  const SectionTrace tr = section_trace_with_ladder(table, f0, op.density(f0));
  CHECK(std::abs(tr.m_pair + hs.value) / hs.value < 0.01);
}

TEST_CASE("section too short is detected and can be overridden") {
  const DiracParams p{0.0, 0.0, CutoffSpec::exponential()};
  const LineSymbol line{0.01, p, 0};  // kernel decay length ~ 100
  const LineOperator op(line);
  const LineKernelTable table = LineKernelTable::build(op, 0.15, 80);  // X = 12, far too short
  const TestFunction f = TestFunction::renyi(1.0);
  const double rho = op.density(f);
  CHECK_THROWS_AS(finite_section_trace(table, f, rho, 80), SectionTooShortError);
  const SectionTrace tr = finite_section_trace(table, f, rho, 80, /*allow_short=*/true);
  CHECK(tr.kernel_short);
  CHECK(tr.err > 0.0);
}

TEST_CASE("m_pair self-convergence over a doubling ladder (Dirac, kappa=1)") {
  // s small enough that the ladder is still in the convergence regime
  const DiracParams p{0.0, 0.1, CutoffSpec::exponential()};
  const LineSymbol line{0.25, p, 0};
  const LineOperator op(line);
  const TestFunction f = TestFunction::renyi(1.0);
  const double rho = op.density(f);
  const LineKernelTable table = LineKernelTable::build(op, 0.15, 400);  // X = 60
  const double m1 = finite_section_trace(table, f, rho, 100, true).m_pair;  // X = 15
  const double m2 = finite_section_trace(table, f, rho, 200, true).m_pair;  // X = 30
  const double m4 = finite_section_trace(table, f, rho, 400, true).m_pair;  // X = 60
  CHECK(std::abs(m4 - m2) <= std::abs(m2 - m1) + 1e-12);
  // value stable to < 1% between X and 2X at production sizes
  CHECK(std::abs(m4 - m2) / std::abs(m4) < 0.01);
}

TEST_CASE("m_pair stable to <1% between (X,n) and (2X,2n) at s = 1") {
  const DiracParams p{0.0, 0.1, CutoffSpec::exponential()};
  const LineSymbol line{1.0, p, 0};
  const LineOperator op(line);
  const TestFunction f = TestFunction::renyi(1.0);
  const double rho = op.density(f);
  const LineKernelTable table = LineKernelTable::build(op, 0.15, 400);
  const double m2 = finite_section_trace(table, f, rho, 200, true).m_pair;
  const double m4 = finite_section_trace(table, f, rho, 400, true).m_pair;
  CHECK(std::abs(m4 - m2) / std::abs(m4) < 0.01);
}

TEST_CASE("sharp cutoff cannot feed the 1D transforms") {
  const DiracParams p{0.0, 0.0, CutoffSpec::sharp_one()};
  const LineSymbol line{1.0, p, 0};
  CHECK_THROWS_AS(LineOperator{line}, AccuracyError);
}

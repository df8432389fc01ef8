#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dve/entropy/eta.hpp"
#include "dve/entropy/test_function.hpp"

using namespace dve;

TEST_CASE("eta vanishes outside (0,1), continuously") {
  CHECK(eta(0.5, -0.3) == 0.0);
  CHECK(eta(0.5, 1.0) == 0.0);
  CHECK(eta(0.5, 0.0) == 0.0);
  CHECK(eta(2.0, 1.7) == 0.0);
  // continuity at the endpoints (Hoelder with exponent min(kappa,1))
  CHECK(eta(1.0, 1e-14) < 1e-12);
  CHECK(eta(0.7, 1.0 - 1e-14) < 4.0 * std::pow(1e-14, 0.7));  // ~ u^kappa/(1-kappa)
}

TEST_CASE("eta at 1/2 equals log 2 for every order") {
  for (const double kappa : {0.3, 0.5, 1.0, 1.5, 2.0, 3.0}) {
    CHECK(eta(kappa, 0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  }
}

TEST_CASE("eta(2, 1/4) equals -log(5/8)") {
  CHECK(eta(2.0, 0.25) == doctest::Approx(-std::log(0.625)).epsilon(1e-13));
  CHECK(eta(2.0, 0.25) == doctest::Approx(0.47000362924573555).epsilon(1e-12));
}

TEST_CASE("eta symmetry and nonnegativity on a grid") {
  for (const double kappa : {0.3, 0.7, 1.0, 1.3, 2.0, 4.0}) {
    for (int i = 0; i <= 2000; ++i) {
      const double t = -0.5 + 2.0 * i / 2000.0;
      const double v = eta(kappa, t);
      CHECK(v >= 0.0);
      CHECK(v == doctest::Approx(eta(kappa, 1.0 - t)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("continuity in kappa near 1") {
  // sup-difference decreases monotonically as kappa -> 1
  double prev = 1e300;
  for (int k = 3; k <= 8; ++k) {
    const double kappa = 1.0 + std::pow(10.0, -k);
    double sup = 0.0;
    for (int i = 1; i < 400; ++i) {
      const double t = i / 400.0;
      sup = std::max(sup, std::abs(eta(kappa, t) - eta(1.0, t)));
    }
    CHECK(sup < prev + 1e-15);
    prev = sup;
  }
  CHECK(prev < 1e-7);
}

TEST_CASE("concavity constant: exact and oracle-frozen values") {
  CHECK(concavity_constant(RenyiOrder::of(1.0)) == 4.0);
  // grid-maximization oracle values (50-digit offline computation):
  // kappa=0.5 attains the sup at t=1/2 with eta'' = -2
  CHECK(concavity_constant(RenyiOrder::of(0.5)) == doctest::Approx(2.0).epsilon(1e-10));
  // kappa=1.5: interior maximum near t ~ 0.1406
  CHECK(concavity_constant(RenyiOrder::of(1.5)) ==
        doctest::Approx(4.7135231514303).epsilon(1e-9));
  // kappa=2: sup approaches 0 at the endpoints
  CHECK(concavity_constant(RenyiOrder::of(2.0)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(concavity_constant(RenyiOrder::of(2.5)), UnsupportedOrderError);
}

TEST_CASE("finite-difference second derivative respects -k0") {
  for (const double kappa : {0.5, 1.0, 1.5}) {
    const double k0 = concavity_constant(RenyiOrder::of(kappa));
    const double h = 2e-4;  // large enough that fd cancellation noise stays below the slack
    for (int i = 1; i < 200; ++i) {
      const double t = i / 200.0;
      if (t < 3 * h || t > 1.0 - 3 * h) continue;
      const double fd = (eta(kappa, t + h) - 2.0 * eta(kappa, t) + eta(kappa, t - h)) / (h * h);
      CHECK(fd <= -k0 + 1e-6);
    }
  }
}

TEST_CASE("closed-form second derivative matches finite differences") {
  for (const double kappa : {0.4, 1.0, 1.7}) {
    for (const double t : {0.11, 0.35, 0.5, 0.82}) {
      const double h = 1e-5;
      const double fd = (eta(kappa, t + h) - 2.0 * eta(kappa, t) + eta(kappa, t - h)) / (h * h);
      CHECK(eta_second_derivative(kappa, t) == doctest::Approx(fd).epsilon(1e-4));
    }
  }
}

TEST_CASE("RenyiOrder validation and metadata") {
  CHECK_THROWS_AS(RenyiOrder::of(0.0), InvalidArgument);
  CHECK_THROWS_AS(RenyiOrder::of(-1.0), InvalidArgument);
  CHECK(RenyiOrder::of(0.5).gamma_exponent() == 0.5);
  CHECK(RenyiOrder::of(1.7).gamma_exponent() == 1.0);
}

TEST_CASE("TestFunction: f0 sum and renyi sum") {
  const double vals[4] = {0.0, 0.5, 1.0, 0.25};
  const TestFunction f0 = TestFunction::f0();
  CHECK(f0.sum(vals, 4) == doctest::Approx(0.5 * (0.25 + 1.0 + 0.0625)).epsilon(1e-14));
  const TestFunction e1 = TestFunction::renyi(1.0);
  CHECK(e1.sum(vals, 4) ==
        doctest::Approx(eta(1.0, 0.5) + eta(1.0, 0.25)).epsilon(1e-13));
}

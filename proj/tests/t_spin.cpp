#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dve/entropy/eta.hpp"
#include "dve/spin/matrix_function.hpp"

using namespace dve;

namespace {

SpinorMatrix random_hermitian(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  SpinorMatrix a;
  for (int i = 0; i < 4; ++i) {
    a(i, i) = g(rng);
    for (int j = i + 1; j < 4; ++j) {
      const cplx v{g(rng), g(rng)};
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

// unitary via spectral exponential of a random Hermitian generator
SpinorMatrix random_unitary(std::mt19937_64& rng) {
  const SpinorMatrix h = random_hermitian(rng);
  return apply_matrix_function(h, [](double t) { return std::polar(1.0, t); });
}

}  // namespace

TEST_CASE("gamma matrices: exact entries and anticommutation") {
  const SpinorMatrix g0 = gamma(0);
  CHECK(g0(0, 0) == cplx(1.0));
  CHECK(g0(1, 1) == cplx(1.0));
  CHECK(g0(2, 2) == cplx(-1.0));
  CHECK(g0(3, 3) == cplx(-1.0));

  const double metric[4] = {1.0, -1.0, -1.0, -1.0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      SpinorMatrix anti = gamma(i) * gamma(j) + gamma(j) * gamma(i);
      anti -= (i == j ? 2.0 * metric[i] : 0.0) * SpinorMatrix::identity();
      CHECK(anti.max_abs() == 0.0);  // integer arithmetic, exact
    }

  CHECK(max_abs_diff(gamma(0) * gamma(0), SpinorMatrix::identity()) == 0.0);
  CHECK_THROWS_AS(gamma(4), InvalidArgument);
  CHECK_THROWS_AS(gamma(-1), InvalidArgument);
}

TEST_CASE("apply_matrix_function: identity and square on gamma0") {
  const SpinorMatrix g0 = gamma(0);
  CHECK(max_abs_diff(apply_matrix_function(g0, [](double t) { return t; }), g0) < 1e-14);
  CHECK(max_abs_diff(apply_matrix_function(g0, [](double t) { return t * t; }),
                     SpinorMatrix::identity()) < 1e-14);
}

TEST_CASE("apply_matrix_function: eta on a 0/1 projector vanishes") {
  SpinorMatrix d;
  d(2, 2) = 1.0;
  d(3, 3) = 1.0;
  const SpinorMatrix r = apply_matrix_function(d, [](double t) { return eta(1.0, t); });
  CHECK(r.max_abs() < 1e-14);
}

TEST_CASE("apply_matrix_function: identity reproduction on random Hermitians") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const SpinorMatrix a = random_hermitian(rng);
    CHECK(max_abs_diff(apply_matrix_function(a, [](double t) { return t; }), a) < 1e-12);
  }
}

TEST_CASE("apply_matrix_function is basis-covariant") {
  std::mt19937_64 rng(4242);
  auto f = [](double t) { return std::tanh(t) + 0.25 * t * t; };
  for (int trial = 0; trial < 30; ++trial) {
    const SpinorMatrix a = random_hermitian(rng);
    const SpinorMatrix u = random_unitary(rng);
    const SpinorMatrix uadj = u.adjoint();
    const SpinorMatrix lhs = apply_matrix_function(u * a * uadj, f);
    const SpinorMatrix rhs = u * apply_matrix_function(a, f) * uadj;
    CHECK(max_abs_diff(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  SpinorMatrix a;
  a(0, 1) = 1.0;  // missing conjugate partner
  CHECK_THROWS_AS(spinor_eigh(a), PreconditionError);
}

TEST_CASE("hermiticity defect below tolerance is symmetrized away") {
  SpinorMatrix a = gamma(0);
  a(0, 1) = cplx(0.0, 5e-11);
  a(1, 0) = cplx(0.0, 5e-11);  // defect ~1e-10, inside tolerance
  const SpinorEigenSystem es = spinor_eigh(a);
  CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(es.eigenvalues[3] == doctest::Approx(1.0).epsilon(1e-9));
}

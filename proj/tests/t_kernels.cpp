#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "dve/entropy/eta.hpp"
#include "dve/kernels/batch.hpp"
#include "dve/kernels/dispatch.hpp"
#include "dve/kernels/vmath.hpp"

using namespace dve;

namespace {

struct PathGuard {
  ~PathGuard() { simd::clear_force(); }
};

bool have_avx2() { return simd::available(simd::Path::avx2); }

std::vector<double> random_vec(std::size_t n, double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("vector exp matches libm") {
  if (!have_avx2()) return;
  PathGuard guard;
  simd::force(simd::Path::avx2);
  // log-uniform magnitudes plus near-zero arguments
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-3.0, 2.85);  // 10^2.85 ~ 708
  std::uniform_real_distribution<double> sign(-1.0, 1.0);
  std::vector<double> x(100000);
  for (auto& v : x) v = std::copysign(std::pow(10.0, mag(rng)), sign(rng));
  x.push_back(0.0);
  x.push_back(-708.0);
  x.push_back(708.0);
  x.push_back(-745.0);
  std::vector<double> y(x.size());
  kernels::exp_batch(x.data(), y.data(), x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ref = std::exp(x[i]);
    const double rel = std::abs(y[i] - ref) / (ref > 0 ? ref : 1.0);
    worst = std::max(worst, rel);
  }
  CHECK(worst < 5e-15);
}

TEST_CASE("vector exp saturates outside the clamp range") {
  if (!have_avx2()) return;
  PathGuard guard;
  simd::force(simd::Path::avx2);
  const double x[4] = {-800.0, -746.0, 710.0, 1000.0};
  double y[4];
  kernels::exp_batch(x, y, 4);
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 0.0);
  CHECK(std::isinf(y[2]));
  CHECK(std::isinf(y[3]));
}

TEST_CASE("vector log matches libm") {
  if (!have_avx2()) return;
  PathGuard guard;
  simd::force(simd::Path::avx2);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mag(-300.0, 300.0);
  std::vector<double> x(100000);
  for (auto& v : x) v = std::pow(10.0, mag(rng));
  // near-1 band where absolute error matters
  for (int i = -2000; i <= 2000; ++i) x.push_back(1.0 + i * 1e-7);
  x.push_back(1e-310);  // subnormal
  std::vector<double> y(x.size());
  kernels::log_batch(x.data(), y.data(), x.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double ref = std::log(x[i]);
    const double err = std::abs(y[i] - ref);
    const double rel = err / std::max(std::abs(ref), 1e-3);
    worst = std::max(worst, rel);
  }
  CHECK(worst < 5e-15);
}

TEST_CASE("eta_sum: scalar and avx2 paths agree") {
  if (!have_avx2()) return;
  PathGuard guard;
  for (const double kappa : {0.3, 0.5, 1.0, 1.0 + 5e-7, 1.5, 2.0, 3.7}) {
    auto t = random_vec(20011, -0.2, 1.2, 12345);  // includes out-of-range values
    simd::force(simd::Path::scalar);
    const double s_ref = kernels::eta_sum(kappa, t.data(), t.size());
    simd::force(simd::Path::avx2);
    const double s_simd = kernels::eta_sum(kappa, t.data(), t.size());
    CHECK(std::abs(s_ref - s_simd) <= 1e-12 * std::max(1.0, std::abs(s_ref)));
  }
}

TEST_CASE("eta_batch agrees with the scalar definition") {
  if (!have_avx2()) return;
  PathGuard guard;
  simd::force(simd::Path::avx2);
  const auto t = random_vec(4097, -0.5, 1.5, 99);
  std::vector<double> out(t.size());
  for (const double kappa : {0.5, 1.0, 2.0}) {
    kernels::eta_batch(kappa, t.data(), out.data(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(out[i] == doctest::Approx(eta(kappa, t[i])).epsilon(1e-13));
    }
  }
}

TEST_CASE("symbol_weights: scalar and avx2 paths agree, singular node handled") {
  if (!have_avx2()) return;
  PathGuard guard;
  auto e2 = random_vec(8191, 0.0, 60.0, 31);
  e2[5] = 0.0;  // singular momentum
  std::vector<double> a1(e2.size()), w1(e2.size()), a2(e2.size()), w2(e2.size());
  for (const CutoffKind kind :
       {CutoffKind::exponential, CutoffKind::gaussian, CutoffKind::rational}) {
    simd::force(simd::Path::scalar);
    kernels::symbol_weights(kind, 4.0, 0.7, e2.data(), a1.data(), w1.data(), e2.size());
    simd::force(simd::Path::avx2);
    kernels::symbol_weights(kind, 4.0, 0.7, e2.data(), a2.data(), w2.data(), e2.size());
    for (std::size_t i = 0; i < e2.size(); ++i) {
      CHECK(a1[i] == doctest::Approx(a2[i]).epsilon(5e-14));
      CHECK(w1[i] == doctest::Approx(w2[i]).epsilon(5e-14));
    }
  }
  CHECK(w1[5] == 0.0);
  CHECK(w2[5] == 0.0);
  CHECK(a1[5] == 0.5);  // phi(0)/2, the convention value
}

TEST_CASE("compensated_sum survives catastrophic cancellation") {
  PathGuard guard;
  // benign part, exactly summable in long double
  auto x = random_vec(100003, -1.0, 1.0, 777);
  long double ref = 0.0L;
  for (const double v : x) ref += static_cast<long double>(v);
  // bracket with a large canceling pair that plain summation cannot absorb
  x.insert(x.begin(), 1e16);
  x.push_back(-1e16);
  double results[2] = {0, 0};
  int idx = 0;
  for (const simd::Path p : {simd::Path::scalar, simd::Path::avx2}) {
    if (!simd::available(p)) continue;
    simd::force(p);
    results[idx] = kernels::compensated_sum(x.data(), x.size());
    CHECK(std::abs(results[idx] - static_cast<double>(ref)) < 1e-10);
    ++idx;
  }
  if (idx == 2) CHECK(std::abs(results[0] - results[1]) < 1e-9);
}

TEST_CASE("cutoff_batch spot values") {
  PathGuard guard;
  const double x[5] = {0.0, 0.5, 1.0, 3.0, 20.0};
  double phi[5];
  for (const simd::Path p : {simd::Path::scalar, simd::Path::avx2}) {
    if (!simd::available(p)) continue;
    simd::force(p);
    kernels::cutoff_batch(CutoffKind::exponential, 0.0, x, phi, 5);
    CHECK(phi[0] == doctest::Approx(1.0));
    CHECK(phi[3] == doctest::Approx(std::exp(-3.0)).epsilon(1e-14));
    kernels::cutoff_batch(CutoffKind::rational, 4.0, x, phi, 5);
    CHECK(phi[1] == doctest::Approx(std::pow(1.5, -4.0)).epsilon(1e-13));
    kernels::cutoff_batch(CutoffKind::sharp_one, 0.0, x, phi, 5);
    CHECK(phi[4] == 1.0);
  }
}

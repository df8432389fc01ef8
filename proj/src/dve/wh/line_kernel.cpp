#include "dve/wh/line_kernel.hpp"

#include <cmath>

#include "dve/kernels/batch.hpp"

namespace dve {

namespace {

constexpr double kTailFloor = 1e-12;  // phi-decay tail bound target for transforms

double dirac_t_max(const LineSymbol& line) {
  const CutoffSpec& phi = line.params.cutoff;
  if (!phi.has_decay())
    throw AccuracyError("line kernel: the sharp test cutoff has no decay; tail bound unattainable");
  // |profiles| <= phi(t)/2, so the transform tail beyond T is bounded by
  // (2pi)^{-1} tail_integral(T); push it below kTailFloor.
  double t = phi.support_radius(1e-3);
  for (int it = 0; it < 200 && phi.tail_integral(t) > kTailFloor * M_PI; ++it) t *= 1.25;
  if (phi.tail_integral(t) > kTailFloor * M_PI)
    throw AccuracyError("line kernel: cutoff decays too slowly for the tail target");
  return t;
}

}  // namespace

LineOperator::LineOperator(const LineSymbol& line, QuadOptions opt)
    : line_(line), opt_(opt), t_max_(dirac_t_max(line)) {
  line.params.validate();
}

LineOperator::LineOperator(const ScalarLine& scalar, QuadOptions opt)
    : scalar_(scalar), opt_(opt), t_max_(scalar.t_max) {}

std::array<double, 4> LineOperator::transforms(double u) const {
  if (scalar_) {
    const auto& g = scalar_->g;
    BatchFn f = [&g](const double* t, double* out, std::size_t n) {
      for (std::size_t i = 0; i < n; ++i) out[i] = g(t[i]);
    };
    const QuadValue v = oscillatory_transform(f, Parity::even, u, t_max_, opt_);
    return {v.value / M_PI, 0.0, 0.0, 0.0};
  }
  const LineSymbol& line = *line_;
  const double mu = line.params.epsilon * line.params.mass;
  const double s = line.s;
  const CutoffKind kind = line.params.cutoff.kind;
  const double rho = line.params.cutoff.rho;
  const double inv_support = 1.0 / line.params.cutoff.support;
  const bool with_mass = mu > 0.0;

  MultiTransform mt;
  mt.count = with_mass ? 4 : 3;
  mt.parity = {Parity::even, Parity::even, Parity::odd};
  if (with_mass) mt.parity.push_back(Parity::even);
  mt.fill = [s, mu, kind, rho, inv_support, with_mass](const double* t, double* g, std::size_t n) {
    // q = sqrt(s^2 + t^2 + mu^2), phi = cutoff(q); profiles a, b, c (odd), d
    if (n > 16) throw InvalidArgument("line profile batch: node block too large");
    double q2[16], half_phi[16], w[16];
    const double c2 = s * s + mu * mu;
    for (std::size_t i = 0; i < n; ++i) q2[i] = t[i] * t[i] + c2;
    kernels::symbol_weights(kind, rho, inv_support, q2, half_phi, w, n);
    for (std::size_t i = 0; i < n; ++i) {
      g[i] = half_phi[i];           // a(t)
      g[n + i] = s * w[i];          // b(t)
      g[2 * n + i] = t[i] * w[i];   // c(t), odd
      if (with_mass) g[3 * n + i] = -mu * w[i];  // d(t)
    }
  };
  const std::vector<QuadValue> v = oscillatory_transform_multi(mt, u, t_max_, opt_);
  return {v[0].value / M_PI, v[1].value / M_PI, v[2].value / M_PI,
          with_mass ? v[3].value / M_PI : 0.0};
}

SpinorMatrix LineOperator::kernel(double u) const {
  const bool mirror = u < 0.0;
  const std::array<double, 4> tr = transforms(std::abs(u));
  // (2pi)^{-1} int_R e^{iut}: even profiles give (1/pi) int_0^inf cos, the odd
  // one (i/pi) int_0^inf sin
  const double sign = mirror ? -1.0 : 1.0;
  if (scalar_) return clifford_combination(cplx(tr[0]), {}, cplx(0.0));
  const int axis = line_->axis == 1 ? 1 : 0;
  std::array<cplx, 3> b{};
  b[axis] = cplx(tr[1]);
  b[2] = cplx(0.0, sign * tr[2]);
  return clifford_combination(cplx(tr[0]), b, cplx(tr[3]));
}

std::array<double, 2> LineOperator::symbol_eigenvalues(double t) const {
  if (scalar_) {
    const double g = scalar_->g(t);
    return {g, g};
  }
  const LineProfiles p = line_profiles(*line_, t);
  return {0.0, p.phi_val};
}

double LineOperator::density(const TestFunction& f) const {
  // (2pi)^{-1} int_R tr f(A(t)) dt; eigenvalues come in two pairs, and the
  // integrand is even in t.
  BatchFn integrand = [this, &f](const double* t, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto ev = symbol_eigenvalues(t[i]);
      out[i] = 2.0 * (f(ev[0]) + f(ev[1]));
    }
  };
  QuadOptions opt = opt_;
  opt.abs_tol = 1e-11;
  const QuadValue v = integrate_adaptive(integrand, 0.0, t_max_, opt);
  return v.value / M_PI;
}

LineKernelTable LineKernelTable::build(const LineOperator& op, double dx, int count) {
  if (!(dx > 0.0) || count <= 0) throw InvalidArgument("LineKernelTable: bad dx or count");
  LineKernelTable t;
  t.dx = dx;
  t.blocks.resize(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) t.blocks[static_cast<std::size_t>(j)] = op.kernel(dx * j);
  return t;
}

HsCrossNorm hs_cross_norm(const LineKernelTable& table) {
  // composite Simpson over the table for int_0^X u |k(u)|_F^2 du
  const int n = table.count();
  if (n < 5) throw InvalidArgument("hs_cross_norm: table too short");
  std::vector<double> f(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double u = table.dx * j;
    const double nf = table.at(j).frobenius_norm();
    f[static_cast<std::size_t>(j)] = u * nf * nf;
  }
  const int m = (n - 1) % 2 == 0 ? n : n - 1;  // even number of intervals
  double s = f[0] + f[static_cast<std::size_t>(m - 1)];
  for (int j = 1; j < m - 1; ++j) s += f[static_cast<std::size_t>(j)] * (j % 2 == 1 ? 4.0 : 2.0);
  double value = s * table.dx / 3.0;
  if (m != n) value += 0.5 * (f[static_cast<std::size_t>(n - 2)] + f[static_cast<std::size_t>(n - 1)]) * table.dx;

  // geometric tail estimate from the last stretch of the table:
  // int_X^inf u |k(X)|_F^2 e^{-2 r (u-X)} du with r fitted log-linearly
  double error = 0.0;
  const int fit = std::min(10, n / 4);
  double rate = 0.0;
  int used = 0;
  for (int j = n - fit; j + 1 < n; ++j) {
    const double a = table.at(j).frobenius_norm(), b = table.at(j + 1).frobenius_norm();
    if (a > 0 && b > 0 && b < a) {
      rate += std::log(a / b) / table.dx;
      ++used;
    }
  }
  const double x_end = table.dx * (n - 1);
  const double nf_end = table.at(n - 1).frobenius_norm();
  if (used > 0 && rate > 0) {
    const double lam = 2.0 * rate / used;
    error += nf_end * nf_end * (x_end / lam + 1.0 / (lam * lam));
  } else {
    error += nf_end * nf_end * x_end * x_end;  // no decay detected: be loud
  }
  // quadrature discretization error, |Simpson - trapezoid| style proxy
  double trap = 0.5 * (f[0] + f[static_cast<std::size_t>(m - 1)]);
  for (int j = 1; j < m - 1; ++j) trap += f[static_cast<std::size_t>(j)];
  error += std::abs(value - trap * table.dx) * 0.1;
  return {value, error};
}

}  // namespace dve

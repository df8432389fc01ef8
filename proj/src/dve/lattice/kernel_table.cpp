#include "dve/lattice/kernel_table.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "dve/entropy/test_function.hpp"
#include "dve/kernels/batch.hpp"

namespace dve {

namespace {

std::mutex g_fftw_mutex;  // plan creation is not thread-safe

// backward DFT (sign +i) of a real field, normalized by 1/N^3
std::vector<cplx> transform_field(const TorusLattice& lat, const std::vector<double>& field) {
  const long n3 = lat.total_sites();
  const int n = lat.points_per_dim;
  std::vector<cplx> out(static_cast<std::size_t>(n3));
  fftw_complex* buf;
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    buf = fftw_alloc_complex(static_cast<std::size_t>(n3));
    plan = fftw_plan_dft_3d(n, n, n, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  for (long i = 0; i < n3; ++i) {
    buf[i][0] = field[static_cast<std::size_t>(i)];
    buf[i][1] = 0.0;
  }
  fftw_execute(plan);
  const double norm = 1.0 / static_cast<double>(n3);
  for (long i = 0; i < n3; ++i)
    out[static_cast<std::size_t>(i)] = cplx(buf[i][0] * norm, buf[i][1] * norm);
  {
    std::lock_guard<std::mutex> lock(g_fftw_mutex);
    fftw_destroy_plan(plan);
    fftw_free(buf);
  }
  return out;
}

void dirac_fill(const DiracParams& p, double mu, double scale, const TorusLattice& lat,
                std::vector<double>& a, std::array<std::vector<double>, 3>& b,
                std::vector<double>& d) {
  const long n3 = lat.total_sites();
  const int n = lat.points_per_dim;
  a.resize(static_cast<std::size_t>(n3));
  d.resize(static_cast<std::size_t>(n3));
  for (auto& bb : b) bb.resize(static_cast<std::size_t>(n3));

  std::vector<double> e2(static_cast<std::size_t>(n3));
  std::vector<double> w(static_cast<std::size_t>(n3));
  const double mu2 = mu * mu;
  for (int ix = 0; ix < n; ++ix) {
    const double kx = lat.momentum_component(ix);
    for (int iy = 0; iy < n; ++iy) {
      const double ky = lat.momentum_component(iy);
      const double kxy2 = kx * kx + ky * ky + mu2;
      double* row = e2.data() + lat.flat_index(ix, iy, 0);
      for (int iz = 0; iz < n; ++iz) {
        const double kz = lat.momentum_component(iz);
        row[iz] = kxy2 + kz * kz;
      }
    }
  }
  kernels::symbol_weights(p.cutoff.kind, p.cutoff.rho, scale / p.cutoff.support, e2.data(),
                          a.data(), w.data(), static_cast<std::size_t>(n3));
  for (int ix = 0; ix < n; ++ix) {
    const double kx = lat.momentum_component(ix);
    for (int iy = 0; iy < n; ++iy) {
      const double ky = lat.momentum_component(iy);
      const long base = lat.flat_index(ix, iy, 0);
      for (int iz = 0; iz < n; ++iz) {
        const double kz = lat.momentum_component(iz);
        const double wi = w[static_cast<std::size_t>(base + iz)];
        b[0][static_cast<std::size_t>(base + iz)] = kx * wi;
        b[1][static_cast<std::size_t>(base + iz)] = ky * wi;
        b[2][static_cast<std::size_t>(base + iz)] = kz * wi;
        d[static_cast<std::size_t>(base + iz)] = -mu * wi;
      }
    }
  }
}

}  // namespace

DiracMomentumSymbol::DiracMomentumSymbol(DiracParams p) : params_(p) { p.validate(); }

void DiracMomentumSymbol::fill(const TorusLattice& lat, std::vector<double>& a,
                               std::array<std::vector<double>, 3>& b,
                               std::vector<double>& d) const {
  dirac_fill(params_, params_.mass, params_.epsilon, lat, a, b, d);
}

std::string DiracMomentumSymbol::describe() const {
  return "dirac_momentum(m=" + std::to_string(params_.mass) +
         ", eps=" + std::to_string(params_.epsilon) + ", " + params_.cutoff.name() + ")";
}

DiracRescaledSymbol::DiracRescaledSymbol(DiracParams p) : params_(p) { p.validate(); }

void DiracRescaledSymbol::fill(const TorusLattice& lat, std::vector<double>& a,
                               std::array<std::vector<double>, 3>& b,
                               std::vector<double>& d) const {
  // A^(eps)(xi) has the same Clifford structure with mu = eps*m and unit scale
  dirac_fill(params_, params_.epsilon * params_.mass, 1.0, lat, a, b, d);
}

std::string DiracRescaledSymbol::describe() const {
  return "dirac_rescaled(m=" + std::to_string(params_.mass) +
         ", eps=" + std::to_string(params_.epsilon) + ", " + params_.cutoff.name() + ")";
}

ScalarRadialSymbol::ScalarRadialSymbol(std::function<double(double)> g, std::string name)
    : g_(std::move(g)), name_(std::move(name)) {}

void ScalarRadialSymbol::fill(const TorusLattice& lat, std::vector<double>& a,
                              std::array<std::vector<double>, 3>& b,
                              std::vector<double>& d) const {
  const long n3 = lat.total_sites();
  const int n = lat.points_per_dim;
  a.resize(static_cast<std::size_t>(n3));
  d.assign(static_cast<std::size_t>(n3), 0.0);
  for (auto& bb : b) bb.assign(static_cast<std::size_t>(n3), 0.0);
  for (int ix = 0; ix < n; ++ix) {
    const double kx = lat.momentum_component(ix);
    for (int iy = 0; iy < n; ++iy) {
      const double ky = lat.momentum_component(iy);
      const long base = lat.flat_index(ix, iy, 0);
      for (int iz = 0; iz < n; ++iz) {
        const double kz = lat.momentum_component(iz);
        a[static_cast<std::size_t>(base + iz)] = g_(kx * kx + ky * ky + kz * kz);
      }
    }
  }
}

SpinorMatrix KernelTable3D::block(int dx, int dy, int dz) const {
  const long idx = lat.flat_index(lat.wrap(dx), lat.wrap(dy), lat.wrap(dz));
  const std::size_t i = static_cast<std::size_t>(idx);
  return clifford_combination(fields[0][i], {fields[1][i], fields[2][i], fields[3][i]},
                              fields[4][i]);
}

namespace {

KernelTable3D build_impl(const LatticeSymbol& sym, const TorusLattice& lat,
                         const LatticeOptions& opt, bool squared) {
  lat.validate();
  if (sym.requires_positive_epsilon() && !(sym.cutoff_scale() > 0.0))
    throw PreconditionError(
        "build_kernel: the momentum-space symbol needs eps > 0 for a cutoff-suppressed "
        "Brillouin edge");
  KernelTable3D table;
  table.lat = lat;
  table.symbol_name = sym.describe();
  const double eps = sym.cutoff_scale();
  if (eps > 0.0 && lat.spacing() > eps / 3.0) {
    if (!opt.allow_coarse)
      throw ResolutionError("lattice spacing h=" + std::to_string(lat.spacing()) +
                            " exceeds eps/3; override to proceed");
    table.coarse_override = true;
  }

  std::vector<double> a, d;
  std::array<std::vector<double>, 3> b;
  sym.fill(lat, a, b, d);

  const long n3 = lat.total_sites();
  table.eig_pairs.resize(static_cast<std::size_t>(n3));
  for (long i = 0; i < n3; ++i) {
    const std::size_t u = static_cast<std::size_t>(i);
    const double r = std::sqrt(b[0][u] * b[0][u] + b[1][u] * b[1][u] + b[2][u] * b[2][u] +
                               d[u] * d[u]);
    table.eig_pairs[u] = {a[u] - r, a[u] + r};
  }

  if (squared) {
    // (a + v.X)^2 = (a^2 + |v|^2) + 2 a v.X in the Clifford span
    for (long i = 0; i < n3; ++i) {
      const std::size_t u = static_cast<std::size_t>(i);
      const double a0 = a[u];
      const double v2 =
          b[0][u] * b[0][u] + b[1][u] * b[1][u] + b[2][u] * b[2][u] + d[u] * d[u];
      a[u] = a0 * a0 + v2;
      for (auto& bb : b) bb[u] *= 2.0 * a0;
      d[u] *= 2.0 * a0;
    }
  }

  table.fields[0] = transform_field(lat, a);
  for (int c = 0; c < 3; ++c) table.fields[1 + c] = transform_field(lat, b[c]);
  table.fields[4] = transform_field(lat, d);
  return table;
}

}  // namespace

KernelTable3D build_kernel(const LatticeSymbol& sym, const TorusLattice& lat,
                           const LatticeOptions& opt) {
  return build_impl(sym, lat, opt, false);
}

KernelTable3D build_kernel_squared(const LatticeSymbol& sym, const TorusLattice& lat,
                                   const LatticeOptions& opt) {
  return build_impl(sym, lat, opt, true);
}

double density_per_site(const KernelTable3D& table, const TestFunction& f) {
  const std::size_t n3 = table.eig_pairs.size();
  std::vector<double> lam(2 * n3);
  for (std::size_t i = 0; i < n3; ++i) {
    lam[2 * i] = table.eig_pairs[i][0];
    lam[2 * i + 1] = table.eig_pairs[i][1];
  }
  return 2.0 * f.sum(lam.data(), lam.size()) / static_cast<double>(n3);
}

}  // namespace dve

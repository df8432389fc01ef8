#include "dve/lattice/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "dve/kernels/batch.hpp"
#include "dve/lin/lapack.hpp"

namespace dve {

CorrelationMatrix correlation_matrix(const KernelTable3D& table, const Region& region,
                                     const LatticeOptions& opt) {
  const auto& sites = region.sites();
  if (sites.empty()) throw RegionError("correlation_matrix: empty region mask");
  const long m = region.site_count();
  const long dim = 4 * m;
  if (dim > opt.max_dense_dim)
    throw SizeError("correlation matrix dim " + std::to_string(dim) + " exceeds the dense cap " +
                    std::to_string(opt.max_dense_dim) + "; largest cube side at this cap: " +
                    std::to_string(static_cast<long>(std::cbrt(opt.max_dense_dim / 4.0))) +
                    " sites");

  CorrelationMatrix c;
  c.dim = dim;
  c.symbol_name = table.symbol_name;
  c.lat = table.lat;
  c.m.assign(static_cast<std::size_t>(dim) * dim, cplx{});

  // fill the lower triangle with K(x_i - x_j), mirror the adjoint above
  for (long j = 0; j < m; ++j) {
    for (long i = j; i < m; ++i) {
      const SpinorMatrix blk = table.block(sites[i].x - sites[j].x, sites[i].y - sites[j].y,
                                           sites[i].z - sites[j].z);
      for (int bc = 0; bc < 4; ++bc)
        for (int br = 0; br < 4; ++br) {
          const cplx v = blk(br, bc);
          c.m[static_cast<std::size_t>(4 * j + bc) * dim + (4 * i + br)] = v;
          if (i != j || br > bc)
            c.m[static_cast<std::size_t>(4 * i + br) * dim + (4 * j + bc)] = std::conj(v);
        }
    }
  }
  return c;
}

double CorrelationMatrix::hermiticity_defect_sample() const {
  // construction mirrors the adjoint; sample the raw kernel symmetry anyway
  double defect = 0.0;
  const long step = std::max<long>(1, dim / 64);
  for (long i = 0; i < dim; i += step)
    for (long j = 0; j <= i; j += step) {
      const cplx a = m[static_cast<std::size_t>(j) * dim + i];
      const cplx b = m[static_cast<std::size_t>(i) * dim + j];
      defect = std::max(defect, std::abs(a - std::conj(b)));
    }
  return defect;
}

std::vector<double> correlation_spectrum(const CorrelationMatrix& c) {
  std::vector<cplx> a = c.m;
  return lin::hermitian_eigenvalues(a, static_cast<int>(c.dim));
}

EntropyResult entanglement_entropy(const CorrelationMatrix& c, const RenyiOrder& order,
                                   const KernelTable3D& table) {
  EntropyResult r;
  r.dim = c.dim;
  std::vector<double> w = correlation_spectrum(c);
  for (double& v : w) {
    if (v < -kClipTol || v > 1.0 + kClipTol) ++r.clip_count;
    v = std::clamp(v, 0.0, 1.0);
  }
  if (r.clip_count * 100 > c.dim)
    throw NumericalError("entanglement_entropy: " + std::to_string(r.clip_count) +
                         " eigenvalues clipped (over 1% of dim " + std::to_string(c.dim) + ")");
  const TestFunction f = TestFunction::renyi(order.kappa);
  r.trace_term = kernels::eta_sum(order.kappa, w.data(), w.size());
  r.density_term = static_cast<double>(c.dim / 4) * density_per_site(table, f);
  r.value = r.trace_term - r.density_term;
  return r;
}

}  // namespace dve

#include "dve/lattice/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "dve/lin/lapack.hpp"

namespace dve {

SchattenResult schatten_commutator_slope(const LatticeSymbol& sym, const TorusLattice& lat,
                                         const std::vector<int>& cube_sides, double sigma,
                                         const LatticeOptions& opt) {
  if (!(sigma > 0.0 && sigma <= 1.0))
    throw InvalidArgument("schatten diagnostic: sigma must lie in (0,1]");
  if (cube_sides.size() < 3) throw FitError("schatten diagnostic: need at least 3 scales");
  if (std::set<int>(cube_sides.begin(), cube_sides.end()).size() != cube_sides.size())
    throw FitError("schatten diagnostic: degenerate scale list");

  const KernelTable3D k1 = build_kernel(sym, lat, opt);
  const KernelTable3D k2 = build_kernel_squared(sym, lat, opt);

  SchattenResult out;
  out.sigma = sigma;
  for (const int side : cube_sides) {
    const Region region = Region::cube(lat, side * lat.spacing());
    const CorrelationMatrix c = correlation_matrix(k1, region, opt);
    const CorrelationMatrix csq = correlation_matrix(k2, region, opt);
    const int dim = static_cast<int>(c.dim);

    // M = chi Op^2 chi - (chi Op chi)^2, Hermitian PSD up to rounding
    std::vector<cplx> prod;
    lin::matmul(c.m, c.m, prod, dim);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = csq.m[i] - prod[i];
    std::vector<double> lam = lin::hermitian_eigenvalues(prod, dim);

    double q = 0.0;
    for (double v : lam)
      if (v > 0.0) q += std::pow(v, 0.5 * sigma);
    out.points.push_back({static_cast<double>(side), 2.0 * q, c.dim});
  }

  // log-log least squares
  const std::size_t n = out.points.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : out.points) {
    const double x = std::log(p.alpha), y = std::log(p.quasi_norm);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-12) throw FitError("schatten diagnostic: degenerate regression");
  out.slope = (n * sxy - sx * sy) / det;
  const double icept = (sy - out.slope * sx) / n;
  double ss = 0;
  for (const auto& p : out.points) {
    const double r = std::log(p.quasi_norm) - (icept + out.slope * std::log(p.alpha));
    ss += r * r;
  }
  out.residual = std::sqrt(ss / n);
  return out;
}

}  // namespace dve

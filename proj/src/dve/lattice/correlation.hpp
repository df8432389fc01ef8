#pragma once

#include "dve/entropy/test_function.hpp"
#include "dve/lattice/kernel_table.hpp"
#include "dve/lattice/region.hpp"

namespace dve {

// Hermitian restriction of the lattice operator to a voxel region:
// 4x4 blocks K(x_i - x_j) over mask sites, column-major, spectrum in [0,1]
// up to the clip tolerance.
struct CorrelationMatrix {
  long dim = 0;
  std::vector<cplx> m;  // column-major dim x dim
  std::string symbol_name;
  TorusLattice lat;

  double hermiticity_defect_sample() const;
};

CorrelationMatrix correlation_matrix(const KernelTable3D& table, const Region& region,
                                     const LatticeOptions& opt = {});

struct EntropyResult {
  double value = 0.0;      // S = sum_j f(lambda_j) - sites * density_per_site
  double trace_term = 0.0; // sum_j f(lambda_j)
  double density_term = 0.0;
  long clip_count = 0;
  long dim = 0;
};

// Renyi entanglement entropy of the region from the dense spectrum of C.
// Eigenvalues outside [-clip_tol, 1+clip_tol] are counted and clipped into
// [0,1]; more than 1% of them is a numerical-quality error.
EntropyResult entanglement_entropy(const CorrelationMatrix& c, const RenyiOrder& order,
                                   const KernelTable3D& table);

// Spectrum of C (ascending); exposed for tests and diagnostics.
std::vector<double> correlation_spectrum(const CorrelationMatrix& c);

}  // namespace dve

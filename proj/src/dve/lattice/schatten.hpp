#pragma once

#include "dve/lattice/correlation.hpp"

namespace dve {

// Empirical commutator diagnostic: singular values of [Op(A), chi_Lambda]
// realized on the lattice. With B = (1-chi) Op chi, the commutator's singular
// values are those of B, each twice, and B*B = chi Op^2 chi - (chi Op chi)^2
// closes the computation inside the mask.
struct SchattenPoint {
  double alpha = 0.0;       // region scale (cube side in lattice units)
  double quasi_norm = 0.0;  // sum_k s_k^sigma over the commutator spectrum
  long dim = 0;
};

struct SchattenResult {
  std::vector<SchattenPoint> points;
  double slope = 0.0;     // d log(quasi_norm) / d log(alpha)
  double residual = 0.0;  // rms of the log-log fit
  double sigma = 0.0;
};

// alpha is implemented as simultaneous region scaling: cube sides (in sites)
// from `cube_sides`. Requires sigma in (0,1] and at least 3 distinct sides.
SchattenResult schatten_commutator_slope(const LatticeSymbol& sym, const TorusLattice& lat,
                                         const std::vector<int>& cube_sides, double sigma,
                                         const LatticeOptions& opt = {});

}  // namespace dve

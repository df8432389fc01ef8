#pragma once

#include <array>

#include "dve/common.hpp"

namespace dve {

// Periodic cubic lattice: box side L (length units), n even points per
// dimension, spacing h = L/n. Momenta live on the folded grid
// (2 pi / L) * m with integer components in [-n/2, n/2).
struct TorusLattice {
  double box_side = 0.0;
  int points_per_dim = 0;

  double spacing() const { return box_side / points_per_dim; }
  long total_sites() const {
    const long n = points_per_dim;
    return n * n * n;
  }
  // folded integer frequency of grid index i in [0, n)
  int folded(int i) const { return i < points_per_dim / 2 ? i : i - points_per_dim; }
  double momentum_component(int i) const {
    return 2.0 * M_PI / box_side * folded(i);
  }
  long flat_index(int ix, int iy, int iz) const {
    const long n = points_per_dim;
    return (static_cast<long>(ix) * n + iy) * n + iz;
  }
  int wrap(int i) const {
    const int n = points_per_dim;
    return ((i % n) + n) % n;
  }

  void validate() const {
    if (!(box_side > 0.0)) throw ValidationError("lattice.box_side must be positive");
    if (points_per_dim <= 0 || points_per_dim % 2 != 0)
      throw ValidationError("lattice.points_per_dim must be a positive even integer");
  }
};

}  // namespace dve

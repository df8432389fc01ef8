#pragma once

#include <string>

#include "dve/harness/fit.hpp"
#include "dve/lattice/correlation.hpp"
#include "dve/widom/coefficient.hpp"

namespace dve {

struct RegionSpec {
  enum class Kind { cube, ball };
  Kind kind = Kind::cube;
  double size = 1.0;  // cube side or ball radius, physical units, at L = 1

  Region rasterize(const TorusLattice& lat, double scale) const;
  double boundary_area_unit() const;  // vol_2 of the boundary at L = 1
  std::string name() const { return kind == Kind::cube ? "cube" : "ball"; }
};

struct SweepRow {
  double l = 0.0;
  double entropy = 0.0;
  long clip_count = 0;
  long sites = 0;
};

struct SweepRecord {
  DiracParams params;
  double kappa = 1.0;
  RegionSpec region;
  TorusLattice lat;
  std::vector<SweepRow> rows;
  FitResult fit;
  bool coarse_override = false;

  // cross-validation against the 1D coefficient pipeline
  double prediction = 0.0;     // eps^{-2} * M_kappa^(eps) * vol2(boundary at L=1)
  double prediction_err = 0.0;
  double relative_gap = 0.0;
  bool pass = false;
  double tolerance = 0.2;
  std::string widom_note;
};

struct SweepConfig {
  DiracParams params;
  double kappa = 1.0;
  TorusLattice lat;
  RegionSpec region;
  std::vector<double> l_values;
  LatticeOptions lattice_opt;
  int jobs = 1;
};

// Entropies over the scaled regions on one shared kernel table, then the
// quadratic fit. L values must be strictly increasing, at least 3 of them.
SweepRecord run_sweep(const SweepConfig& cfg);

// Fill prediction/relative_gap/pass from a Widom result computed at matching
// parameters. Mismatched parameters raise ComparisonError.
void compare_with_widom(SweepRecord& rec, const WidomResult& widom, double tolerance);

}  // namespace dve

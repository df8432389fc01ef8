#pragma once

#include <string>
#include <vector>

#include "dve/lattice/torus.hpp"

namespace dve {

struct Site {
  int x, y, z;
};

// Voxel region on the torus: a sorted site mask plus the analytic boundary
// area of the generating primitive (cube 6a^2, ball 4pi r^2; voxel lists use
// the exposed-face count). Regions are centered at the torus midpoint.
class Region {
 public:
  static Region cube(const TorusLattice& lat, double side);
  static Region ball(const TorusLattice& lat, double radius);
  static Region voxels(const TorusLattice& lat, std::vector<Site> sites);

  const std::vector<Site>& sites() const { return sites_; }
  long site_count() const { return static_cast<long>(sites_.size()); }
  double boundary_area() const { return boundary_area_; }
  std::string describe() const { return describe_; }

  // sites of clearance between the mask and its periodic image, minimum over axes
  int wrap_margin(const TorusLattice& lat) const;

  // margin rule: at least margin_factor * max(eps, correlation length
  // estimate) sites of padding; throws RegionError unless overridden.
  void check_margin(const TorusLattice& lat, double epsilon, double mass, double margin_factor,
                    bool override_margin) const;

 private:
  std::vector<Site> sites_;
  double boundary_area_ = 0.0;
  std::string describe_;
};

}  // namespace dve

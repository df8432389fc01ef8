#include "dve/lattice/region.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace dve {

namespace {

void sort_sites(std::vector<Site>& s) {
  std::sort(s.begin(), s.end(), [](const Site& a, const Site& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });
}

}  // namespace

Region Region::cube(const TorusLattice& lat, double side) {
  lat.validate();
  if (!(side > 0.0)) throw RegionError("cube side must be positive");
  const int w = static_cast<int>(std::lround(side / lat.spacing()));
  if (w < 1) throw RegionError("cube rasterizes to zero sites at this spacing");
  if (w > lat.points_per_dim) throw RegionError("cube does not fit the torus");
  const int lo = lat.points_per_dim / 2 - w / 2;
  Region r;
  r.sites_.reserve(static_cast<std::size_t>(w) * w * w);
  for (int x = lo; x < lo + w; ++x)
    for (int y = lo; y < lo + w; ++y)
      for (int z = lo; z < lo + w; ++z) r.sites_.push_back({x, y, z});
  r.boundary_area_ = 6.0 * side * side;
  r.describe_ = "cube(side=" + std::to_string(side) + ", sites/dim=" + std::to_string(w) + ")";
  return r;
}

Region Region::ball(const TorusLattice& lat, double radius) {
  lat.validate();
  if (!(radius > 0.0)) throw RegionError("ball radius must be positive");
  const double h = lat.spacing();
  const int c = lat.points_per_dim / 2;
  const int reach = static_cast<int>(std::ceil(radius / h)) + 1;
  if (2 * reach >= lat.points_per_dim) throw RegionError("ball does not fit the torus");
  Region r;
  for (int x = c - reach; x <= c + reach; ++x)
    for (int y = c - reach; y <= c + reach; ++y)
      for (int z = c - reach; z <= c + reach; ++z) {
        const double dx = (x - c) * h, dy = (y - c) * h, dz = (z - c) * h;
        if (dx * dx + dy * dy + dz * dz <= radius * radius) r.sites_.push_back({x, y, z});
      }
  if (r.sites_.empty()) throw RegionError("ball rasterizes to zero sites at this spacing");
  r.boundary_area_ = 4.0 * M_PI * radius * radius;
  r.describe_ = "ball(radius=" + std::to_string(radius) + ")";
  return r;
}

Region Region::voxels(const TorusLattice& lat, std::vector<Site> sites) {
  lat.validate();
  if (sites.empty()) throw RegionError("voxel region is empty");
  for (auto& s : sites) {
    s.x = lat.wrap(s.x);
    s.y = lat.wrap(s.y);
    s.z = lat.wrap(s.z);
  }
  sort_sites(sites);
  sites.erase(std::unique(sites.begin(), sites.end(),
                          [](const Site& a, const Site& b) {
                            return a.x == b.x && a.y == b.y && a.z == b.z;
                          }),
              sites.end());
  Region r;
  r.sites_ = std::move(sites);
  // exposed-face count times h^2
  std::set<long> mask;
  for (const auto& s : r.sites_) mask.insert(lat.flat_index(s.x, s.y, s.z));
  long faces = 0;
  const int d[6][3] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  for (const auto& s : r.sites_)
    for (const auto& dir : d) {
      const long nb = lat.flat_index(lat.wrap(s.x + dir[0]), lat.wrap(s.y + dir[1]),
                                     lat.wrap(s.z + dir[2]));
      if (mask.find(nb) == mask.end()) ++faces;
    }
  r.boundary_area_ = static_cast<double>(faces) * lat.spacing() * lat.spacing();
  r.describe_ = "voxels(" + std::to_string(r.sites_.size()) + " sites)";
  return r;
}

int Region::wrap_margin(const TorusLattice& lat) const {
  int margin = lat.points_per_dim;
  for (int axis = 0; axis < 3; ++axis) {
    int lo = lat.points_per_dim, hi = -1;
    for (const auto& s : sites_) {
      const int v = axis == 0 ? s.x : (axis == 1 ? s.y : s.z);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    margin = std::min(margin, lat.points_per_dim - (hi - lo + 1));
  }
  return margin;
}

void Region::check_margin(const TorusLattice& lat, double epsilon, double mass,
                          double margin_factor, bool override_margin) const {
  if (sites_.empty()) throw RegionError("region mask is empty");
  const double h = lat.spacing();
  const double corr_len = mass > 0.0 ? 1.0 / mass : epsilon;  // massless: cutoff scale
  const double needed_len = margin_factor * std::max(epsilon, corr_len);
  const int needed = static_cast<int>(std::ceil(needed_len / h));
  const int have = wrap_margin(lat);
  if (have < needed && !override_margin)
    throw RegionError("wrap-around margin " + std::to_string(have) + " sites < required " +
                      std::to_string(needed) + " (override to proceed)");
}

}  // namespace dve

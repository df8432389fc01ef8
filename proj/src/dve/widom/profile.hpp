#pragma once

#include <vector>

#include "dve/wh/section.hpp"

namespace dve {

struct ProfilePoint {
  double s = 0.0;
  double m_pair = 0.0;  // two-edge section value at this transverse radius
  double err = 0.0;
  bool kernel_short = false;
};

struct MProfile {
  std::vector<ProfilePoint> points;  // ascending in s
  DiracParams params;
  TestFunction f;
  int axis = 0;
};

struct ProfileGrid {
  int head_points = 12;   // log-spaced head in [s_head_min, s_head_split]
  double head_min = 1e-3;
  double head_split = 0.3;
  int tail_points = 28;   // geometric tail up to the cutoff support radius
  double tail_floor = 1e-10;  // phi < this defines s_max
};

std::vector<double> make_s_grid(const DiracParams& p, const ProfileGrid& g = {});

// Per-s two-edge section traces m_pair(s). Points whose kernels cannot decay
// within the section cap are kept with inflated error bars instead of failing
// the whole profile. `jobs` > 1 distributes points over a thread pool with a
// deterministic merge.
MProfile m_profile(const DiracParams& p, const TestFunction& f, const std::vector<double>& s_grid,
                   const SectionSettings& set = {}, int jobs = 1, int axis = 0);

}  // namespace dve

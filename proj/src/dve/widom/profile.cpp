#include "dve/widom/profile.hpp"

#include <algorithm>
#include <cmath>

#include "dve/util/parallel.hpp"

namespace dve {

std::vector<double> make_s_grid(const DiracParams& p, const ProfileGrid& g) {
  if (!p.cutoff.has_decay())
    throw InvalidArgument("profile grid needs a decaying cutoff");
  const double mu = p.epsilon * p.mass;
  // s_max from phi(sqrt(s^2+mu^2)) < tail_floor
  const double r = p.cutoff.support_radius(g.tail_floor);
  const double s_max = std::sqrt(std::max(r * r - mu * mu, 1.0));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(g.head_points + g.tail_points));
  // log-spaced head: the profile has a logarithmic singularity at s = 0 when
  // the limit symbol is in play
  for (int i = 0; i < g.head_points; ++i) {
    const double x = static_cast<double>(i) / g.head_points;
    grid.push_back(g.head_min * std::pow(g.head_split / g.head_min, x));
  }
  // geometric tail matched to the cutoff decay
  const double ratio = std::pow(s_max / g.head_split, 1.0 / g.tail_points);
  for (int i = 1; i <= g.tail_points; ++i)
    grid.push_back(g.head_split * std::pow(ratio, static_cast<double>(i)));
  return grid;
}

MProfile m_profile(const DiracParams& p, const TestFunction& f, const std::vector<double>& s_grid,
                   const SectionSettings& set, int jobs, int axis) {
  if (s_grid.empty()) throw InvalidArgument("m_profile: empty s grid");
  MProfile prof;
  prof.params = p;
  prof.f = f;
  prof.axis = axis;
  prof.points.resize(s_grid.size());

  util::parallel_for(s_grid.size(), jobs, [&](std::size_t i) {
    const double s = s_grid[i];
    LineSymbol line{s, p, axis};
    const LineOperator op(line);
    const double rho = op.density(f);
    const SectionPlan plan = plan_section(line.strip_width(), set);
    const LineKernelTable table = LineKernelTable::build(op, plan.dx, plan.n);
    const SectionTrace tr = section_trace_with_ladder(table, f, rho, /*allow_short=*/true);
    prof.points[i] = ProfilePoint{s, tr.m_pair, tr.err, tr.kernel_short};
  });
  return prof;
}

}  // namespace dve

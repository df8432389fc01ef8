#include "dve/harness/sweep.hpp"

#include <cmath>

#include "dve/util/parallel.hpp"

namespace dve {

Region RegionSpec::rasterize(const TorusLattice& lat, double scale) const {
  // re-rasterized at every scale so the boundary-area formula stays analytic
  return kind == Kind::cube ? Region::cube(lat, size * scale) : Region::ball(lat, size * scale);
}

double RegionSpec::boundary_area_unit() const {
  return kind == Kind::cube ? 6.0 * size * size : 4.0 * M_PI * size * size;
}

SweepRecord run_sweep(const SweepConfig& cfg) {
  cfg.params.validate();
  cfg.lat.validate();
  if (cfg.l_values.size() < 3) throw InvalidArgument("sweep: need at least 3 L values");
  for (std::size_t i = 1; i < cfg.l_values.size(); ++i)
    if (!(cfg.l_values[i] > cfg.l_values[i - 1]))
      throw InvalidArgument("sweep: L values must be strictly increasing");

  SweepRecord rec;
  rec.params = cfg.params;
  rec.kappa = cfg.kappa;
  rec.region = cfg.region;
  rec.lat = cfg.lat;

  const DiracMomentumSymbol sym(cfg.params);
  const KernelTable3D table = build_kernel(sym, cfg.lat, cfg.lattice_opt);
  rec.coarse_override = table.coarse_override;

  // The largest region must fit (margins + dense cap) before burning time.
  {
    const Region largest = cfg.region.rasterize(cfg.lat, cfg.l_values.back());
    largest.check_margin(cfg.lat, cfg.params.epsilon, cfg.params.mass,
                         cfg.lattice_opt.margin_factor, cfg.lattice_opt.allow_margin);
    if (4 * largest.site_count() > cfg.lattice_opt.max_dense_dim) {
      const double max_side = std::cbrt(cfg.lattice_opt.max_dense_dim / 4.0) *
                              cfg.lat.spacing() / cfg.region.size;
      throw SizeError("sweep: largest region exceeds the dense cap; max L about " +
                      std::to_string(max_side));
    }
  }

  rec.rows.resize(cfg.l_values.size());
  util::parallel_for(cfg.l_values.size(), cfg.jobs, [&](std::size_t i) {
    const double l = cfg.l_values[i];
    const Region region = cfg.region.rasterize(cfg.lat, l);
    region.check_margin(cfg.lat, cfg.params.epsilon, cfg.params.mass,
                        cfg.lattice_opt.margin_factor, cfg.lattice_opt.allow_margin);
    const CorrelationMatrix c = correlation_matrix(table, region, cfg.lattice_opt);
    const EntropyResult e = entanglement_entropy(c, RenyiOrder::of(cfg.kappa), table);
    rec.rows[i] = SweepRow{l, e.value, e.clip_count, region.site_count()};
  });

  std::vector<double> ls, ss;
  for (const auto& row : rec.rows) {
    ls.push_back(row.l);
    ss.push_back(row.entropy);
  }
  rec.fit = fit_area_coefficient(ls, ss);
  return rec;
}

void compare_with_widom(SweepRecord& rec, const WidomResult& widom, double tolerance) {
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  if (!close(widom.kappa, rec.kappa) || !close(widom.params.mass, rec.params.mass) ||
      !close(widom.params.epsilon, rec.params.epsilon) ||
      widom.params.cutoff.kind != rec.params.cutoff.kind)
    throw ComparisonError("compare: sweep and Widom results have mismatched parameters");
  if (!(rec.params.epsilon > 0.0)) throw ComparisonError("compare: sweep epsilon must be positive");

  const double area = rec.region.boundary_area_unit();
  const double inv_eps2 = 1.0 / (rec.params.epsilon * rec.params.epsilon);
  rec.prediction = inv_eps2 * widom.coefficient.value * area;
  rec.prediction_err = inv_eps2 * widom.coefficient.error * area;
  rec.tolerance = tolerance;
  if (rec.prediction == 0.0) {
    rec.relative_gap = std::numeric_limits<double>::infinity();
    rec.pass = false;
  } else {
    rec.relative_gap = std::abs(rec.fit.c2 - rec.prediction) / std::abs(rec.prediction);
    rec.pass = rec.relative_gap <= tolerance + rec.prediction_err / std::abs(rec.prediction);
  }
  rec.widom_note = "M=" + std::to_string(widom.coefficient.value) + "+-" +
                   std::to_string(widom.coefficient.error);
}

}  // namespace dve

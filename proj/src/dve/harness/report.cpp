#include "dve/harness/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace dve {

using nlohmann::json;

json params_to_json(const DiracParams& p) {
  json j;
  j["mass"] = p.mass;
  j["epsilon"] = p.epsilon;
  j["cutoff"]["kind"] = p.cutoff.name();
  if (p.cutoff.kind == CutoffKind::rational) j["cutoff"]["rho"] = p.cutoff.rho;
  return j;
}

namespace {

json profile_to_json(const MProfile& p) {
  json rows = json::array();
  for (const auto& pt : p.points) rows.push_back({pt.s, pt.m_pair, pt.err});
  return rows;
}

}  // namespace

json widom_to_json(const WidomResult& r) {
  json j;
  j["kappa"] = r.kappa;
  j["epsilon"] = r.params.epsilon;
  j["cutoff"] = params_to_json(r.params)["cutoff"];
  j["mass"] = r.params.mass;
  j["m_profile"] = profile_to_json(r.eta_profile);
  j["coefficient"] = r.coefficient.value;
  j["coefficient_error"] = r.coefficient.error;
  j["f0_coefficient"] = r.f0_coefficient.value;
  j["f0_coefficient_error"] = r.f0_coefficient.error;
  j["k0"] = r.k0;
  j["positivity_ok"] = r.positivity.ok;
  j["positivity_margin"] = r.positivity.margin;
  return j;
}

json sweep_to_json(const SweepRecord& r) {
  json j;
  j["params"] = params_to_json(r.params);
  j["params"]["kappa"] = r.kappa;
  j["region"]["kind"] = r.region.name();
  j["region"]["size"] = r.region.size;
  j["lattice"]["box_side"] = r.lat.box_side;
  j["lattice"]["points_per_dim"] = r.lat.points_per_dim;
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back({row.l, row.entropy, row.clip_count});
  j["fit"]["c2"] = r.fit.c2;
  j["fit"]["c1"] = r.fit.c1;
  j["fit"]["c0"] = r.fit.c0;
  j["fit"]["residual"] = r.fit.residual;
  j["coarse_override"] = r.coarse_override;
  j["prediction"] = r.prediction;
  j["prediction_error"] = r.prediction_err;
  j["relative_gap"] = r.relative_gap;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  return j;
}

std::string sweep_to_csv(const SweepRecord& r) {
  std::ostringstream os;
  os.precision(17);
  os << "L,S\n";
  for (const auto& row : r.rows) os << row.l << "," << row.entropy << "\n";
  return os.str();
}

std::string sweep_to_svg(const SweepRecord& r) {
  // S against L^2, data points plus the fitted quadratic traced along L
  const double w = 640, h = 480, ml = 70, mb = 50, mt = 20, mr = 20;
  double x_max = 1, y_max = 1e-300, y_min = 0;
  for (const auto& row : r.rows) {
    x_max = std::max(x_max, row.l * row.l);
    y_max = std::max(y_max, row.entropy);
    y_min = std::min(y_min, row.entropy);
  }
  y_max *= 1.05;
  const auto px = [&](double x2) { return ml + (w - ml - mr) * x2 / x_max; };
  const auto py = [&](double s) {
    return h - mb - (h - mb - mt) * (s - y_min) / (y_max - y_min);
  };
  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
  os << "<rect width='100%' height='100%' fill='white'/>\n";
  os << "<line x1='" << ml << "' y1='" << h - mb << "' x2='" << w - mr << "' y2='" << h - mb
     << "' stroke='black'/>\n";
  os << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << h - mb
     << "' stroke='black'/>\n";
  os << "<text x='" << (w / 2) << "' y='" << h - 12 << "' font-size='14' text-anchor='middle'>"
     << "L^2</text>\n";
  os << "<text x='18' y='" << (h / 2) << "' font-size='14' text-anchor='middle' "
     << "transform='rotate(-90 18 " << (h / 2) << ")'>S</text>\n";
  // fitted curve sampled along L
  if (!r.rows.empty()) {
    os << "<polyline fill='none' stroke='#d62728' stroke-width='1.5' points='";
    const double l0 = r.rows.front().l, l1 = r.rows.back().l;
    for (int i = 0; i <= 64; ++i) {
      const double l = l0 + (l1 - l0) * i / 64.0;
      const double s = r.fit.c0 + r.fit.c1 * l + r.fit.c2 * l * l;
      os << px(l * l) << "," << py(s) << " ";
    }
    os << "'/>\n";
  }
  for (const auto& row : r.rows)
    os << "<circle cx='" << px(row.l * row.l) << "' cy='" << py(row.entropy)
       << "' r='4' fill='#1f77b4'/>\n";
  os << "<text x='" << ml + 10 << "' y='" << mt + 16 << "' font-size='12'>c2=" << r.fit.c2
     << "  prediction=" << r.prediction << "  gap=" << r.relative_gap << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << content;
}

}  // namespace dve

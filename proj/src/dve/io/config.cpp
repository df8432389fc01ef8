#include "dve/io/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dve/util/parallel.hpp"

namespace dve {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

json parse_scalar(const std::string& raw) {
  const std::string v = trim(raw);
  if (v == "true") return true;
  if (v == "false") return false;
  char* end = nullptr;
  const double num = std::strtod(v.c_str(), &end);
  if (end && *end == '\0' && end != v.c_str()) return num;
  return v;
}

json parse_value(const std::string& raw) {
  if (raw.find(',') == std::string::npos) return parse_scalar(raw);
  json arr = json::array();
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) arr.push_back(parse_scalar(item));
  return arr;
}

template <class T>
void read_key(const json& j, const std::string& dotted, T& out) {
  const json* cur = &j;
  std::size_t pos = 0;
  std::string rest = dotted;
  while ((pos = rest.find('.')) != std::string::npos) {
    const std::string head = rest.substr(0, pos);
    if (!cur->contains(head)) return;
    cur = &(*cur)[head];
    rest = rest.substr(pos + 1);
  }
  if (!cur->contains(rest)) return;
  try {
    out = (*cur)[rest].get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config key '" + dotted + "' has the wrong type");
  }
}

}  // namespace

json parse_flat_config(const std::string& text) {
  json root = json::object();
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ValidationError("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    const json value = parse_value(line.substr(eq + 1));
    // descend dotted path
    json* cur = &root;
    std::size_t pos;
    while ((pos = key.find('.')) != std::string::npos) {
      const std::string head = key.substr(0, pos);
      if (!cur->contains(head)) (*cur)[head] = json::object();
      cur = &(*cur)[head];
      key = key.substr(pos + 1);
    }
    (*cur)[key] = value;
  }
  return root;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  read_key(j, "mass", c.mass);
  read_key(j, "epsilon", c.epsilon);
  std::string kind = c.cutoff.name();
  read_key(j, "cutoff.kind", kind);
  c.cutoff.kind = cutoff_kind_from_name(kind);
  read_key(j, "cutoff.rho", c.cutoff.rho);
  read_key(j, "cutoff.support", c.cutoff.support);
  read_key(j, "kappa_list", c.kappa_list);
  read_key(j, "lattice.box_side", c.lattice_box_side);
  read_key(j, "lattice.points_per_dim", c.lattice_points);
  read_key(j, "region.kind", c.region_kind);
  read_key(j, "region.size", c.region_size);
  read_key(j, "sweep.L_values", c.sweep_l_values);
  read_key(j, "wiener_hopf.dx", c.section.dx);
  read_key(j, "wiener_hopf.n_cap", c.section.n_cap);
  read_key(j, "wiener_hopf.X_min", c.section.x_min);
  read_key(j, "wiener_hopf.X_max", c.section.x_max);
  read_key(j, "wiener_hopf.X_scale", c.section.x_scale);
  read_key(j, "wiener_hopf.head_points", c.grid.head_points);
  read_key(j, "wiener_hopf.tail_points", c.grid.tail_points);
  read_key(j, "wiener_hopf.s_head_min", c.grid.head_min);
  read_key(j, "tolerances.area_gap", c.tol_area_gap);
  read_key(j, "tolerances.f0_identity", c.tol_f0_identity);
  read_key(j, "lattice.allow_coarse", c.allow_coarse);
  read_key(j, "lattice.allow_margin", c.allow_margin);
  read_key(j, "output_dir", c.output_dir);
  double jobs = 0;
  read_key(j, "jobs", jobs);
  c.jobs = static_cast<int>(jobs);
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read config file " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  json j;
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    j = json::parse(text);
  } else {
    j = parse_flat_config(text);
  }
  return from_json(j);
}

json ExperimentConfig::to_json() const {
  json j;
  j["mass"] = mass;
  j["epsilon"] = epsilon;
  j["cutoff"]["kind"] = cutoff.name();
  if (cutoff.kind == CutoffKind::rational) j["cutoff"]["rho"] = cutoff.rho;
  if (cutoff.support != 1.0) j["cutoff"]["support"] = cutoff.support;
  j["kappa_list"] = kappa_list;
  j["lattice"]["box_side"] = lattice_box_side;
  j["lattice"]["points_per_dim"] = lattice_points;
  j["lattice"]["allow_coarse"] = allow_coarse;
  j["lattice"]["allow_margin"] = allow_margin;
  j["region"]["kind"] = region_kind;
  j["region"]["size"] = region_size;
  j["sweep"]["L_values"] = sweep_l_values;
  j["wiener_hopf"]["dx"] = section.dx;
  j["wiener_hopf"]["n_cap"] = section.n_cap;
  j["wiener_hopf"]["X_min"] = section.x_min;
  j["wiener_hopf"]["X_max"] = section.x_max;
  j["wiener_hopf"]["X_scale"] = section.x_scale;
  j["wiener_hopf"]["head_points"] = grid.head_points;
  j["wiener_hopf"]["tail_points"] = grid.tail_points;
  j["wiener_hopf"]["s_head_min"] = grid.head_min;
  j["tolerances"]["area_gap"] = tol_area_gap;
  j["tolerances"]["f0_identity"] = tol_f0_identity;
  j["output_dir"] = output_dir;
  j["jobs"] = jobs;
  return j;
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const char ch : data) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string ExperimentConfig::hash() const {
  // experiment identity only: where results go and how many workers ran are
  // not part of what was computed
  json j = to_json();
  j.erase("output_dir");
  j.erase("jobs");
  return fnv1a_hex(j.dump());
}

RegionSpec ExperimentConfig::region_spec() const {
  RegionSpec r;
  if (region_kind == "cube")
    r.kind = RegionSpec::Kind::cube;
  else if (region_kind == "ball")
    r.kind = RegionSpec::Kind::ball;
  else
    throw ValidationError("region.kind must be 'cube' or 'ball' (got '" + region_kind + "')");
  r.size = region_size;
  return r;
}

LatticeOptions ExperimentConfig::lattice_options() const {
  LatticeOptions o;
  o.allow_coarse = allow_coarse;
  o.allow_margin = allow_margin;
  return o;
}

WidomSettings ExperimentConfig::widom_settings() const {
  WidomSettings w;
  w.section = section;
  w.grid = grid;
  w.jobs = jobs > 0 ? jobs : util::default_jobs();
  return w;
}

void ExperimentConfig::validate(const std::string& phase) const {
  std::vector<std::string> bad;
  if (!(mass >= 0.0)) bad.push_back("mass");
  if (!(epsilon >= 0.0)) bad.push_back("epsilon");
  try {
    cutoff.validate();
  } catch (const ValidationError&) {
    bad.push_back("cutoff.rho");
  }
  if (cutoff.kind == CutoffKind::sharp_one) bad.push_back("cutoff.kind");
  for (const double k : kappa_list)
    if (!(k > 0.0)) bad.push_back("kappa_list");
  if (!(region_size > 0.0)) bad.push_back("region.size");
  if (!(section.dx > 0.0)) bad.push_back("wiener_hopf.dx");
  if (phase == "entropy" || phase == "sweep" || phase == "diagnostics") {
    if (!(epsilon > 0.0)) bad.push_back("epsilon");
    if (!(lattice_box_side > 0.0)) bad.push_back("lattice.box_side");
    if (lattice_points <= 0 || lattice_points % 2 != 0) bad.push_back("lattice.points_per_dim");
  }
  if (phase == "sweep" && sweep_l_values.size() < 3) bad.push_back("sweep.L_values");
  if (!bad.empty()) {
    std::string msg = "invalid config for '" + phase + "': ";
    for (std::size_t i = 0; i < bad.size(); ++i) msg += (i ? ", " : "") + bad[i];
    throw ValidationError(msg);
  }
}

}  // namespace dve

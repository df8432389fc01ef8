#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dve/harness/sweep.hpp"
#include "dve/widom/coefficient.hpp"

namespace dve {

// Experiment configuration. On disk it is either a flat dotted-key text file
//
//     mass = 0.0
//     cutoff.kind = exponential
//     sweep.L_values = 4, 5, 6, 7
//
// or the equivalent JSON document (by .json extension). Both parse into the
// same nested JSON object; hashing the canonical dump gives the config hash
// every output carries.
struct ExperimentConfig {
  double mass = 0.0;
  double epsilon = 0.1;
  CutoffSpec cutoff = CutoffSpec::exponential();
  std::vector<double> kappa_list = {1.0};

  double lattice_box_side = 24.0;
  int lattice_points = 24;

  std::string region_kind = "cube";
  double region_size = 1.0;

  std::vector<double> sweep_l_values = {4, 5, 6, 7, 8};

  // 1D finite-section controls
  SectionSettings section;
  ProfileGrid grid;

  double tol_area_gap = 0.20;
  double tol_f0_identity = 0.01;
  bool allow_coarse = false;
  bool allow_margin = false;

  std::string output_dir = "out";
  int jobs = 0;  // 0: hardware default

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig load(const std::string& path);
  nlohmann::json to_json() const;
  std::string hash() const;  // FNV-1a of the canonical dump

  DiracParams dirac_params() const { return DiracParams{mass, epsilon, cutoff}; }
  TorusLattice lattice() const { return TorusLattice{lattice_box_side, lattice_points}; }
  RegionSpec region_spec() const;
  LatticeOptions lattice_options() const;
  WidomSettings widom_settings() const;

  // phase: which keys a command requires ("entropy" needs epsilon > 0, ...)
  void validate(const std::string& phase) const;
};

// flat dotted-key text -> nested json (numbers, bools, strings, comma lists)
nlohmann::json parse_flat_config(const std::string& text);

std::string fnv1a_hex(const std::string& data);

}  // namespace dve

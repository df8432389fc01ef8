#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dve/widom/coefficient.hpp"

namespace dve::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

// gamma algebra, symbol idempotency/trace/eigenvalues on random momenta,
// rotation covariance; seeded, deterministic.
std::vector<CheckResult> symbol_algebra_checks(const DiracParams& p, int n_momenta,
                                               int n_rotations, std::uint64_t seed);

// closed-form Gaussian fixtures for the 1D pipeline
CheckResult gaussian_kernel_check(double tol);
CheckResult gaussian_hs_check(double tol);

// |m_pair(f0) + hs_cross_norm| / hs_cross_norm < tol at the given radii
CheckResult f0_identity_check(const DiracParams& p, const SectionSettings& set,
                              const std::vector<double>& s_list, double tol);

// coarse-resolution positivity chain at one (kappa, eps)
CheckResult positivity_quick_check(const DiracParams& p, double kappa, WidomSettings set);

}  // namespace dve::cli

#pragma once

#include <vector>

#include "dve/common.hpp"

namespace dve {

struct FitResult {
  double c2 = 0.0, c1 = 0.0, c0 = 0.0;
  double residual = 0.0;  // rms residual relative to max |S|
};

// Least squares of S(L) = c2 L^2 + c1 L + c0. The basis deliberately has no
// L log L term: smooth cutoffs exclude the enhanced growth, and a structured
// residual is the guard on that assumption (see FitResult::residual).
FitResult fit_area_coefficient(const std::vector<double>& l_values,
                               const std::vector<double>& s_values);

}  // namespace dve

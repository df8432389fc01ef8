#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace dve {

using cplx = std::complex<double>;

// Tolerances shared across modules.
inline constexpr double kHermTol = 1e-10;       // hermiticity defect accepted by spectral calculus
inline constexpr double kClipTol = 1e-8;        // eigenvalue excursion outside [0,1] counted as a clip
inline constexpr double kKappaSwitch = 1e-6;    // |kappa-1| below this evaluates the kappa=1 entropy branch

// Radial cutoff families. `sharp_one` (phi == 1) is a lattice test mode, not a
// regularization; it is rejected by config validation and by the 1D transforms.
enum class CutoffKind { exponential, gaussian, rational, sharp_one };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DVE_DEFINE_ERROR(NAME, BASE)  \
  class NAME : public BASE {          \
   public:                            \
    using BASE::BASE;                 \
  }

DVE_DEFINE_ERROR(InvalidArgument, Error);
DVE_DEFINE_ERROR(PreconditionError, Error);
DVE_DEFINE_ERROR(SingularPointError, PreconditionError);  // symbol evaluated at its discontinuity point
DVE_DEFINE_ERROR(ResolutionError, PreconditionError);     // lattice spacing does not resolve the cutoff scale
DVE_DEFINE_ERROR(NumericalError, Error);                  // solver failures, quality gates
DVE_DEFINE_ERROR(UnsupportedOrderError, Error);           // kappa outside the range the positivity theory covers
DVE_DEFINE_ERROR(RegionError, Error);
DVE_DEFINE_ERROR(SizeError, Error);
DVE_DEFINE_ERROR(SectionTooShortError, Error);
DVE_DEFINE_ERROR(AccuracyError, Error);
DVE_DEFINE_ERROR(CoverageError, Error);
DVE_DEFINE_ERROR(FitError, Error);
DVE_DEFINE_ERROR(ComparisonError, Error);
DVE_DEFINE_ERROR(ValidationError, Error);

#undef DVE_DEFINE_ERROR

}  // namespace dve

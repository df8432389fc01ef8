#pragma once

#include "dve/wh/line_kernel.hpp"

namespace dve {

// Finite-section policy. The Nystrom step dx is chosen so that the symbol's
// periodization tail past pi/dx stays below the clip tolerance; the section
// length grows like x_scale / strip width, clamped to [x_min, x_max] and the
// dense block-dimension cap 4*n_cap.
struct SectionSettings {
  double dx = 0.15;
  int n_cap = 1000;          // block dimension cap 4*n_cap
  double x_min = 40.0;
  double x_max = 150.0;
  double x_scale = 13.0;
  double short_kernel_floor = 1e-4;  // |k(X/2)|_F / |k(0)|_F above this is "too short"
};

// Discretization plan for one line. For strip widths above 1 the kernel
// narrows in u roughly like 1/sqrt(s), so the step shrinks and the section
// shortens together, keeping the point count (and the dense solve) bounded.
struct SectionPlan {
  double dx = 0.0;
  int n = 0;
  double x() const { return dx * n; }
};
SectionPlan plan_section(double strip_width, const SectionSettings& set);

struct SectionTrace {
  double m_pair = 0.0;  // tr f(C_X) - X * rho_f, the two-edge boundary value
  double err = 0.0;     // Cauchy estimate from the X vs X/2 ladder
  double x = 0.0;
  int n = 0;
  int clip_count = 0;
  bool kernel_short = false;  // decay check at X/2 failed; err inflated
};

// Assemble the n-point section from the table (blocks k((i-j)dx)*dx), solve
// for its spectrum and form the trace difference. rho_f is the density term
// per unit length. Throws SectionTooShortError when the kernel has not
// decayed at X/2 and `allow_short` is false.
SectionTrace finite_section_trace(const LineKernelTable& table, const TestFunction& f,
                                  double rho_f, int n, bool allow_short = false);

// Convenience ladder: full table at n points plus the n/2 sub-section for the
// error estimate.
SectionTrace section_trace_with_ladder(const LineKernelTable& table, const TestFunction& f,
                                       double rho_f, bool allow_short = false);

// Eigenvalues of the assembled section (ascending); exposed for tests.
std::vector<double> section_spectrum(const LineKernelTable& table, int n);

}  // namespace dve

#include "dve/wh/section.hpp"

#include <algorithm>
#include <cmath>

#include "dve/lin/lapack.hpp"

namespace dve {

SectionPlan plan_section(double strip_width, const SectionSettings& set) {
  const double w = std::max(strip_width, 1e-6);
  const double narrow = std::sqrt(std::max(1.0, w));  // kernel u-width shrink factor
  const double dx = set.dx / narrow;
  const double x = std::clamp(set.x_scale / w, set.x_min / narrow, set.x_max);
  int n = static_cast<int>(std::ceil(x / dx));
  n = std::clamp(n, 8, set.n_cap);
  return SectionPlan{dx, n};
}

namespace {

std::vector<cplx> assemble(const LineKernelTable& table, int n) {
  if (n > table.count())
    throw InvalidArgument("finite_section_trace: table shorter than requested section");
  const int dim = 4 * n;
  std::vector<cplx> a(static_cast<std::size_t>(dim) * dim);
  // column-major; fill lower triangle blocks with k((i-j)dx)*dx, i >= j,
  // mirror the adjoint above so hermiticity is exact by construction
  for (int j = 0; j < n; ++j) {
    for (int i = j; i < n; ++i) {
      const SpinorMatrix& blk = table.at(i - j);
      for (int bc = 0; bc < 4; ++bc)
        for (int br = 0; br < 4; ++br) {
          const cplx v = blk(br, bc) * table.dx;
          a[static_cast<std::size_t>(4 * j + bc) * dim + (4 * i + br)] = v;
          if (i != j || br > bc)
            a[static_cast<std::size_t>(4 * i + br) * dim + (4 * j + bc)] = std::conj(v);
        }
    }
  }
  return a;
}

}  // namespace

std::vector<double> section_spectrum(const LineKernelTable& table, int n) {
  std::vector<cplx> a = assemble(table, n);
  return lin::hermitian_eigenvalues(a, 4 * n);
}

SectionTrace finite_section_trace(const LineKernelTable& table, const TestFunction& f,
                                  double rho_f, int n, bool allow_short) {
  SectionTrace out;
  out.n = n;
  out.x = table.dx * n;

  const double k0 = table.at(0).frobenius_norm();
  const int half = n / 2;
  const double k_half = table.at(half).frobenius_norm();
  const double floor = SectionSettings{}.short_kernel_floor;
  if (k0 > 0.0 && k_half > floor * k0) {
    if (!allow_short)
      throw SectionTooShortError("kernel not decayed at X/2: |k|_F ratio " +
                                 std::to_string(k_half / k0));
    out.kernel_short = true;
  }

  std::vector<double> w = section_spectrum(table, n);
  if (f.kind == TestFunction::Kind::renyi) {
    for (double& v : w) {
      if (v < -kClipTol || v > 1.0 + kClipTol) ++out.clip_count;
      v = std::clamp(v, 0.0, 1.0);
    }
  }
  out.m_pair = f.sum(w.data(), w.size()) - out.x * rho_f;
  if (out.kernel_short && k0 > 0.0) out.err += std::abs(out.m_pair) * (k_half / k0);
  return out;
}

SectionTrace section_trace_with_ladder(const LineKernelTable& table, const TestFunction& f,
                                       double rho_f, bool allow_short) {
  SectionTrace full = finite_section_trace(table, f, rho_f, table.count(), allow_short);
  SectionTrace half = finite_section_trace(table, f, rho_f, table.count() / 2, true);
  full.err += std::abs(full.m_pair - half.m_pair);
  return full;
}

}  // namespace dve

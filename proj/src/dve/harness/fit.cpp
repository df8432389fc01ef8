#include "dve/harness/fit.hpp"

#include <cmath>
#include <set>

namespace dve {

FitResult fit_area_coefficient(const std::vector<double>& l_values,
                               const std::vector<double>& s_values) {
  const std::size_t n = l_values.size();
  if (n != s_values.size()) throw InvalidArgument("fit: size mismatch");
  if (std::set<double>(l_values.begin(), l_values.end()).size() < 3)
    throw FitError("fit: need at least 3 distinct L values");

  // normal equations in long double; the monomial basis on desk-scale L
  // ranges is comfortably conditioned for that
  long double a[3][3] = {};
  long double rhs[3] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const long double l = l_values[i];
    const long double basis[3] = {1.0L, l, l * l};
    for (int r = 0; r < 3; ++r) {
      rhs[r] += basis[r] * static_cast<long double>(s_values[i]);
      for (int c = 0; c < 3; ++c) a[r][c] += basis[r] * basis[c];
    }
  }
  // Gaussian elimination with partial pivoting
  int piv[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(static_cast<double>(a[piv[r]][col])) >
          std::abs(static_cast<double>(a[piv[best]][col])))
        best = r;
    std::swap(piv[col], piv[best]);
    const long double p = a[piv[col]][col];
    if (std::abs(static_cast<double>(p)) < 1e-30) throw FitError("fit: rank-deficient design matrix");
    for (int r = col + 1; r < 3; ++r) {
      const long double f = a[piv[r]][col] / p;
      for (int c = col; c < 3; ++c) a[piv[r]][c] -= f * a[piv[col]][c];
      rhs[piv[r]] -= f * rhs[piv[col]];
    }
  }
  long double x[3];
  for (int col = 2; col >= 0; --col) {
    long double s = rhs[piv[col]];
    for (int c = col + 1; c < 3; ++c) s -= a[piv[col]][c] * x[c];
    x[col] = s / a[piv[col]][col];
  }

  FitResult fr;
  fr.c0 = static_cast<double>(x[0]);
  fr.c1 = static_cast<double>(x[1]);
  fr.c2 = static_cast<double>(x[2]);
  double ss = 0.0, smax = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pred = fr.c0 + fr.c1 * l_values[i] + fr.c2 * l_values[i] * l_values[i];
    ss += (s_values[i] - pred) * (s_values[i] - pred);
    smax = std::max(smax, std::abs(s_values[i]));
  }
  fr.residual = smax > 0 ? std::sqrt(ss / n) / smax : std::sqrt(ss / n);
  return fr;
}

}  // namespace dve

#include "dve/lin/lapack.hpp"

#include <lapacke.h>

#include <string>

#if defined(__has_include)
#if __has_include(<cblas.h>)
#include <cblas.h>
#define DVE_HAVE_CBLAS 1
#endif
#endif

extern "C" void openblas_set_num_threads(int) __attribute__((weak));

namespace dve::lin {

std::vector<double> hermitian_eigenvalues(std::vector<cplx>& a, int n) {
  if (n <= 0 || a.size() < static_cast<std::size_t>(n) * n)
    throw InvalidArgument("hermitian_eigenvalues: bad dimensions");
  std::vector<double> w(n);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                  reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0)
    throw NumericalError("zheevd failed, info=" + std::to_string(info) + ", dim=" + std::to_string(n));
  return w;
}

std::vector<double> hermitian_eigensystem(std::vector<cplx>& a, int n) {
  if (n <= 0 || a.size() < static_cast<std::size_t>(n) * n)
    throw InvalidArgument("hermitian_eigensystem: bad dimensions");
  std::vector<double> w(n);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                                  reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data());
  if (info != 0)
    throw NumericalError("zheevd failed, info=" + std::to_string(info) + ", dim=" + std::to_string(n));
  return w;
}

void matmul(const std::vector<cplx>& a, const std::vector<cplx>& b, std::vector<cplx>& c, int n) {
  c.assign(static_cast<std::size_t>(n) * n, cplx{});
#ifdef DVE_HAVE_CBLAS
  const cplx one{1.0, 0.0}, zero{0.0, 0.0};
  cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, n, n, n, &one, a.data(), n, b.data(), n,
              &zero, c.data(), n);
#else
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      const cplx bkj = b[static_cast<std::size_t>(j) * n + k];
      if (bkj == cplx{}) continue;
      const cplx* ak = &a[static_cast<std::size_t>(k) * n];
      cplx* cj = &c[static_cast<std::size_t>(j) * n];
      for (int i = 0; i < n; ++i) cj[i] += ak[i] * bkj;
    }
#endif
}

void set_blas_threads(int n) {
  if (openblas_set_num_threads) openblas_set_num_threads(n);
}

}  // namespace dve::lin

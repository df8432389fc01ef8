#include "dve/spin/matrix_function.hpp"

#include <vector>

#include "dve/lin/lapack.hpp"

namespace dve {

SpinorEigenSystem spinor_eigh(const SpinorMatrix& a, double herm_tol) {
  const double defect = a.hermiticity_defect();
  if (defect > herm_tol)
    throw PreconditionError("spinor_eigh: matrix is not Hermitian (defect " +
                            std::to_string(defect) + " > tol)");
  // symmetrize, then hand to LAPACK column-major
  std::vector<cplx> buf(16);
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r)
      buf[static_cast<std::size_t>(c) * 4 + r] = 0.5 * (a(r, c) + std::conj(a(c, r)));
  const std::vector<double> w = lin::hermitian_eigensystem(buf, 4);
  SpinorEigenSystem es;
  for (int i = 0; i < 4; ++i) es.eigenvalues[i] = w[i];
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 4; ++r) es.eigenvectors(r, c) = buf[static_cast<std::size_t>(c) * 4 + r];
  return es;
}

}  // namespace dve

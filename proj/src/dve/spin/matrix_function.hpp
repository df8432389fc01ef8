#pragma once

#include <type_traits>
#include <utility>

#include "dve/spin/spinor_matrix.hpp"

namespace dve {

struct SpinorEigenSystem {
  std::array<double, 4> eigenvalues;  // ascending
  SpinorMatrix eigenvectors;          // column j is the eigenvector of eigenvalues[j]
};

// Eigendecomposition of a Hermitian 4x4. The input is checked against
// `herm_tol` and symmetrized (A+A†)/2 before the solve, so discretization
// noise below the tolerance cannot leak into the spectral calculus.
SpinorEigenSystem spinor_eigh(const SpinorMatrix& a, double herm_tol = kHermTol);

// Spectral calculus U f(D) U†. f may return double or cplx; the result is
// Hermitian exactly when f is real-valued. Eigenvalues are not reordered or
// deduplicated; f is applied pointwise.
template <class F>
SpinorMatrix apply_matrix_function(const SpinorMatrix& a, F&& f, double herm_tol = kHermTol) {
  const SpinorEigenSystem es = spinor_eigh(a, herm_tol);
  std::array<cplx, 4> fd;
  for (int i = 0; i < 4; ++i) fd[i] = cplx(std::forward<F>(f)(es.eigenvalues[i]));
  SpinorMatrix r;
  const SpinorMatrix& u = es.eigenvectors;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0;
      for (int k = 0; k < 4; ++k) s += u(i, k) * fd[k] * std::conj(u(j, k));
      r(i, j) = s;
    }
  return r;
}

}  // namespace dve

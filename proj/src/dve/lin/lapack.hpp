#pragma once

#include <vector>

#include "dve/common.hpp"

namespace dve::lin {

// Eigenvalues of a Hermitian matrix stored column-major (dim n), ascending.
// The matrix content is destroyed.
std::vector<double> hermitian_eigenvalues(std::vector<cplx>& a, int n);

// Full eigendecomposition; on return `a` holds the eigenvectors column-wise
// and the returned vector the ascending eigenvalues.
std::vector<double> hermitian_eigensystem(std::vector<cplx>& a, int n);

// c = a * b for column-major square complex matrices (dim n).
void matmul(const std::vector<cplx>& a, const std::vector<cplx>& b, std::vector<cplx>& c, int n);

// Best-effort control of the BLAS thread pool (no-op when the symbol is absent).
void set_blas_threads(int n);

}  // namespace dve::lin

#pragma once

#include <array>

#include "dve/common.hpp"

namespace dve {

// Dense 4x4 complex matrix with value semantics. Every symbol value, gamma
// matrix and spin rotation in the library is one of these.
class SpinorMatrix {
 public:
  static constexpr int kDim = 4;

  SpinorMatrix() = default;  // zero matrix

  static SpinorMatrix identity();

  cplx& operator()(int r, int c) { return e_[r * kDim + c]; }
  const cplx& operator()(int r, int c) const { return e_[r * kDim + c]; }

  SpinorMatrix& operator+=(const SpinorMatrix& o);
  SpinorMatrix& operator-=(const SpinorMatrix& o);
  SpinorMatrix& operator*=(const cplx& s);

  friend SpinorMatrix operator+(SpinorMatrix a, const SpinorMatrix& b) { return a += b; }
  friend SpinorMatrix operator-(SpinorMatrix a, const SpinorMatrix& b) { return a -= b; }
  friend SpinorMatrix operator*(const cplx& s, SpinorMatrix m) { return m *= s; }
  friend SpinorMatrix operator*(SpinorMatrix m, const cplx& s) { return m *= s; }
  friend SpinorMatrix operator*(const SpinorMatrix& a, const SpinorMatrix& b);

  SpinorMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  // max_ij |A_ij - conj(A_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermTol) const { return hermiticity_defect() <= tol; }

  cplx* data() { return e_.data(); }
  const cplx* data() const { return e_.data(); }

 private:
  std::array<cplx, kDim * kDim> e_{};  // row-major
};

double max_abs_diff(const SpinorMatrix& a, const SpinorMatrix& b);

// Dirac-representation gamma matrix, index in {0,1,2,3}.
SpinorMatrix gamma(int index);

// Pauli matrix sigma^index (index in {1,2,3}), row-major 2x2.
std::array<cplx, 4> pauli(int index);

// a*1 + sum_b coeff_b * gamma^b gamma^0 + d * gamma^0. This five-dimensional
// commutative-coefficient span is closed under squaring and carries every
// symbol value in the library.
SpinorMatrix clifford_combination(cplx a, const std::array<cplx, 3>& b, cplx d);

}  // namespace dve

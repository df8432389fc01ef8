#include "dve/spin/spinor_matrix.hpp"

#include <cmath>

namespace dve {

SpinorMatrix SpinorMatrix::identity() {
  SpinorMatrix m;
  for (int i = 0; i < kDim; ++i) m(i, i) = 1.0;
  return m;
}

SpinorMatrix& SpinorMatrix::operator+=(const SpinorMatrix& o) {
  for (int i = 0; i < kDim * kDim; ++i) e_[i] += o.e_[i];
  return *this;
}

SpinorMatrix& SpinorMatrix::operator-=(const SpinorMatrix& o) {
  for (int i = 0; i < kDim * kDim; ++i) e_[i] -= o.e_[i];
  return *this;
}

SpinorMatrix& SpinorMatrix::operator*=(const cplx& s) {
  for (auto& v : e_) v *= s;
  return *this;
}

SpinorMatrix operator*(const SpinorMatrix& a, const SpinorMatrix& b) {
  SpinorMatrix r;
  for (int i = 0; i < SpinorMatrix::kDim; ++i) {
    for (int k = 0; k < SpinorMatrix::kDim; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (int j = 0; j < SpinorMatrix::kDim; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

SpinorMatrix SpinorMatrix::adjoint() const {
  SpinorMatrix r;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

cplx SpinorMatrix::trace() const {
  cplx t = 0;
  for (int i = 0; i < kDim; ++i) t += (*this)(i, i);
  return t;
}

double SpinorMatrix::frobenius_norm() const {
  double s = 0;
  for (const auto& v : e_) s += std::norm(v);
  return std::sqrt(s);
}

double SpinorMatrix::max_abs() const {
  double m = 0;
  for (const auto& v : e_) m = std::max(m, std::abs(v));
  return m;
}

double SpinorMatrix::hermiticity_defect() const {
  double m = 0;
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double max_abs_diff(const SpinorMatrix& a, const SpinorMatrix& b) {
  double m = 0;
  for (int i = 0; i < SpinorMatrix::kDim; ++i)
    for (int j = 0; j < SpinorMatrix::kDim; ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

std::array<cplx, 4> pauli(int index) {
  const cplx I{0.0, 1.0};
  switch (index) {
    case 1:
      return {cplx{0}, cplx{1}, cplx{1}, cplx{0}};
    case 2:
      return {cplx{0}, -I, I, cplx{0}};
    case 3:
      return {cplx{1}, cplx{0}, cplx{0}, cplx{-1}};
    default:
      throw InvalidArgument("pauli: index must be 1, 2 or 3");
  }
}

SpinorMatrix gamma(int index) {
  SpinorMatrix g;
  if (index == 0) {
    g(0, 0) = g(1, 1) = 1.0;
    g(2, 2) = g(3, 3) = -1.0;
    return g;
  }
  if (index < 1 || index > 3) throw InvalidArgument("gamma: index must be in 0..3");
  const auto s = pauli(index);
  // gamma^b = [[0, sigma^b], [-sigma^b, 0]]
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      g(r, 2 + c) = s[r * 2 + c];
      g(2 + r, c) = -s[r * 2 + c];
    }
  }
  return g;
}

SpinorMatrix clifford_combination(cplx a, const std::array<cplx, 3>& b, cplx d) {
  static const std::array<SpinorMatrix, 3> x = {gamma(1) * gamma(0), gamma(2) * gamma(0),
                                                gamma(3) * gamma(0)};
  static const SpinorMatrix g0 = gamma(0);
  SpinorMatrix m = a * SpinorMatrix::identity();
  for (int beta = 0; beta < 3; ++beta) {
    if (b[beta] != cplx{}) m += b[beta] * x[beta];
  }
  if (d != cplx{}) m += d * g0;
  return m;
}

}  // namespace dve

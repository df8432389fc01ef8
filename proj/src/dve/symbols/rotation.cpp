#include "dve/symbols/rotation.hpp"

#include <cmath>

namespace dve {

Mat3 rotation_z(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return Mat3{{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

Mat3 rotation_y(double t) {
  const double c = std::cos(t), s = std::sin(t);
  return Mat3{{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

std::array<double, 3> mat3_apply(const Mat3& r, const std::array<double, 3>& v) {
  std::array<double, 3> w{};
  for (int i = 0; i < 3; ++i) w[i] = r[i][0] * v[0] + r[i][1] * v[1] + r[i][2] * v[2];
  return w;
}

namespace {

void check_rotation(const Mat3& r, double tol) {
  // R^T R = 1
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += r[k][i] * r[k][j];
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(s - expect) > tol)
        throw PreconditionError("rotation_spin_matrix: input is not orthogonal");
    }
  const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                     r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                     r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  if (std::abs(det - 1.0) > tol)
    throw PreconditionError("rotation_spin_matrix: det R != +1");
}

// diag(e^{i t/2}, e^{-i t/2}, e^{i t/2}, e^{-i t/2})
SpinorMatrix spin_z(double t) {
  SpinorMatrix q;
  const cplx p = std::polar(1.0, 0.5 * t);
  const cplx m = std::conj(p);
  q(0, 0) = p;
  q(1, 1) = m;
  q(2, 2) = p;
  q(3, 3) = m;
  return q;
}

// block-diagonal [[cos(t/2), sin(t/2)], [-sin(t/2), cos(t/2)]] twice
SpinorMatrix spin_y(double t) {
  SpinorMatrix q;
  const double c = std::cos(0.5 * t), s = std::sin(0.5 * t);
  for (int b = 0; b < 4; b += 2) {
    q(b, b) = c;
    q(b, b + 1) = s;
    q(b + 1, b) = -s;
    q(b + 1, b + 1) = c;
  }
  return q;
}

}  // namespace

SpinorMatrix rotation_spin_matrix(const Mat3& r, double tol) {
  check_rotation(r, tol);

  // z-y-z Euler angles of R = Rz(alpha) Ry(beta) Rz(gamma)
  double alpha, beta, gammaa;
  const double szy = std::hypot(r[0][2], r[1][2]);
  if (r[2][2] > 1.0 - 1e-9) {
    // pure z-rotation
    beta = 0.0;
    alpha = std::atan2(r[1][0], r[0][0]);
    gammaa = 0.0;
  } else if (r[2][2] < -1.0 + 1e-9) {
    beta = M_PI;
    alpha = std::atan2(-r[0][1], -r[0][0]);
    gammaa = 0.0;
  } else {
    beta = std::atan2(szy, r[2][2]);
    alpha = std::atan2(r[1][2], r[0][2]);
    gammaa = std::atan2(r[2][1], -r[2][0]);
  }

  // Q(R1 R2) corresponds to Q(R2) Q(R1): compose in reversed order.
  return spin_z(gammaa) * spin_y(beta) * spin_z(alpha);
}

}  // namespace dve

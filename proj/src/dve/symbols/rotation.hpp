#pragma once

#include <array>

#include "dve/spin/spinor_matrix.hpp"

namespace dve {

using Mat3 = std::array<std::array<double, 3>, 3>;

// SU(4) spin transform Q of a spatial rotation R, with
//   Q (sum_b (Rv)_b gamma^b) Q^{-1} = sum_b v_b gamma^b   for all v,
//   Q gamma^0 Q^{-1} = gamma^0.
// Built from the z-y-z Euler decomposition with explicit diagonal z-factors
// and the real orthogonal y-factor; phase fixed so that Q(identity) = identity.
// |R33| > 1 - 1e-9 is treated as a pure z-rotation (gimbal fallback).
SpinorMatrix rotation_spin_matrix(const Mat3& r, double tol = 1e-10);

// helpers shared with tests
Mat3 rotation_z(double theta);
Mat3 rotation_y(double theta);
Mat3 mat3_mul(const Mat3& a, const Mat3& b);
std::array<double, 3> mat3_apply(const Mat3& r, const std::array<double, 3>& v);

}  // namespace dve

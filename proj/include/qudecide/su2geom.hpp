#pragma once

#include <array>

#include "qudecide/types.hpp"

namespace qudecide {

/// SU(2) parametrization U(phi, k) = I cos(phi) + sin(phi)(kx X + ky Y + kz Z)
/// with X = i*sigma2, Y = i*sigma1, Z = i*sigma3.
struct AxisAngle {
  double phi = 0.0;
  Eigen::Vector3d k{0.0, 0.0, 1.0};
};

/// The su(2) basis elements underlying the parametrization.
const ComplexMatrix& su2_X();
const ComplexMatrix& su2_Y();
const ComplexMatrix& su2_Z();

/// Throws NonUnitAxisError if |k| deviates from 1 beyond 1e-12.
UnitaryGate su2_from_axis_angle(const AxisAngle& a);

/// Rotation by phi in SO(3) acting on su(2) coordinates ordered (Y, X, Z).
/// Satisfies adjoint_of(su2_from_axis_angle({phi, k})) == so3_from_axis_angle(2*phi, k).
RealMatrix so3_from_axis_angle(double phi, const Eigen::Vector3d& k);

/// Composition U(a1)U(a2) = U(result) with gamma in [0, pi], sin(gamma) >= 0
/// and the sign absorbed into the axis. When the product is +-I the axis is
/// degenerate; returns gamma in {0, pi} with axis (0, 0, 1).
AxisAngle compose_axis_angle(const AxisAngle& a1, const AxisAngle& a2);

/// Inverse parametrization, phi in [0, pi]; +-I map to phi in {0, pi} with
/// axis (0, 0, 1). Throws DimensionMismatchError unless d = 2.
AxisAngle axis_angle_from_su2(const UnitaryGate& u);

/// Closed-form commutant test for a noncommuting pair: returns false (commutant
/// larger than scalars) iff both angles are odd multiples of pi/2, or one is
/// and the axes are orthogonal. Throws CommutingPairError if the pair
/// commutes within 1e-8.
bool commutant_trivial_su2(const AxisAngle& a1, const AxisAngle& a2);

/// The 24 angles theta = k_i*pi/i, i <= 6, gcd(k_i, i) = 1, in [0, 2pi),
/// sorted ascending.
const std::array<double, 24>& exceptional_angle_table();

/// True iff phi mod 2pi is within tol of a table entry.
bool is_exceptional_angle(double phi, double tol = 1e-9);

}  // namespace qudecide

#include "qudecide/su2geom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qudecide/linalg.hpp"

namespace qudecide {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

ComplexMatrix make_X() {
  ComplexMatrix m(2, 2);
  m << 0, 1, -1, 0;  // i*sigma2
  return m;
}
ComplexMatrix make_Y() {
  ComplexMatrix m(2, 2);
  m << 0, kI, kI, 0;  // i*sigma1
  return m;
}
ComplexMatrix make_Z() {
  ComplexMatrix m(2, 2);
  m << kI, 0, 0, -kI;  // i*sigma3
  return m;
}

void require_unit_axis(const Eigen::Vector3d& k) {
  if (std::abs(k.squaredNorm() - 1.0) > 1e-12) {
    throw NonUnitAxisError("axis vector must have unit norm");
  }
}

double wrap_2pi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

// phi == k*pi/2 for odd k, modulo 2pi.
bool is_odd_half_pi(double phi, double tol = 1e-9) {
  const double r = wrap_2pi(phi) / (kPi / 2.0);
  const double n = std::round(r);
  if (std::abs(r - n) * (kPi / 2.0) > tol) return false;
  return std::llround(n) % 2 != 0;
}

}  // namespace

const ComplexMatrix& su2_X() {
  static const ComplexMatrix x = make_X();
  return x;
}
const ComplexMatrix& su2_Y() {
  static const ComplexMatrix y = make_Y();
  return y;
}
const ComplexMatrix& su2_Z() {
  static const ComplexMatrix z = make_Z();
  return z;
}

UnitaryGate su2_from_axis_angle(const AxisAngle& a) {
  require_unit_axis(a.k);
  ComplexMatrix m = std::cos(a.phi) * ComplexMatrix::Identity(2, 2) +
                    std::sin(a.phi) *
                        (a.k.x() * su2_X() + a.k.y() * su2_Y() +
                         a.k.z() * su2_Z());
  return UnitaryGate::checked("U", std::move(m), 1e-10);
}

RealMatrix so3_from_axis_angle(double phi, const Eigen::Vector3d& k) {
  require_unit_axis(k);
  // Generator matching the (Y, X, Z) coordinate ordering of su(2): the axis
  // of rotation in coordinate space is (ky, kx, kz).
  RealMatrix g = RealMatrix::Zero(3, 3);
  g(0, 1) = k.z();
  g(1, 0) = -k.z();
  g(0, 2) = -k.x();
  g(2, 0) = k.x();
  g(1, 2) = k.y();
  g(2, 1) = -k.y();
  const double s = std::sin(phi);
  const double h = std::sin(phi / 2.0);
  return RealMatrix::Identity(3, 3) + s * g + 2.0 * h * h * (g * g);
}

AxisAngle compose_axis_angle(const AxisAngle& a1, const AxisAngle& a2) {
  require_unit_axis(a1.k);
  require_unit_axis(a2.k);
  const double c1 = std::cos(a1.phi), s1 = std::sin(a1.phi);
  const double c2 = std::cos(a2.phi), s2 = std::sin(a2.phi);
  const double cg = std::clamp(c1 * c2 - s1 * s2 * a1.k.dot(a2.k), -1.0, 1.0);
  const double gamma = std::acos(cg);
  const double sg = std::sin(gamma);
  AxisAngle out;
  if (std::abs(sg) < 1e-12) {
    // Product is +-I; any axis works.
    out.phi = cg > 0.0 ? 0.0 : kPi;
    out.k = Eigen::Vector3d(0.0, 0.0, 1.0);
    return out;
  }
  Eigen::Vector3d v = a1.k * (s1 * c2) + a2.k * (s2 * c1) +
                      a1.k.cross(a2.k) * (s1 * s2);
  out.phi = gamma;
  out.k = v / sg;
  // Guard against drift in the axis norm for nearly degenerate products.
  out.k.normalize();
  return out;
}

AxisAngle axis_angle_from_su2(const UnitaryGate& u) {
  if (u.d != 2) {
    throw DimensionMismatchError("axis_angle_from_su2: d = 2 required");
  }
  const ComplexMatrix& m = u.matrix;
  const double c = 0.5 * std::real(m(0, 0) + m(1, 1));
  // sin(phi) * k from the off-diagonal/imaginary parts:
  //   m = [[c + i kz s, (kx + i ky) s], [(-kx + i ky) s, c - i kz s]]
  Eigen::Vector3d v(std::real(m(0, 1)), std::imag(m(0, 1)),
                    0.5 * std::imag(m(0, 0) - m(1, 1)));
  const double s = v.norm();
  AxisAngle out;
  if (s < 1e-12) {
    out.phi = c > 0.0 ? 0.0 : kPi;
    out.k = Eigen::Vector3d(0.0, 0.0, 1.0);
    return out;
  }
  out.phi = std::atan2(s, c);
  out.k = v / s;
  return out;
}

bool commutant_trivial_su2(const AxisAngle& a1, const AxisAngle& a2) {
  const ComplexMatrix u1 = su2_from_axis_angle(a1).matrix;
  const ComplexMatrix u2 = su2_from_axis_angle(a2).matrix;
  if (hs_norm(u1 * u2 - u2 * u1) <= 1e-8) {
    throw CommutingPairError("commutant_trivial_su2: gates commute");
  }
  const bool h1 = is_odd_half_pi(a1.phi);
  const bool h2 = is_odd_half_pi(a2.phi);
  if (h1 && h2) return false;
  const bool orthogonal = std::abs(a1.k.dot(a2.k)) < 1e-9;
  if ((h1 || h2) && orthogonal) return false;
  return true;
}

const std::array<double, 24>& exceptional_angle_table() {
  static const std::array<double, 24> table = [] {
    std::array<double, 24> t{};
    int idx = 0;
    for (int den = 1; den <= 6; ++den) {
      for (int num = 0; num < 2 * den; ++num) {
        if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) continue;
        t[idx++] = num * kPi / den;
      }
    }
    std::sort(t.begin(), t.begin() + idx);
    return t;
  }();
  return table;
}

bool is_exceptional_angle(double phi, double tol) {
  const double p = wrap_2pi(phi);
  for (double theta : exceptional_angle_table()) {
    double diff = std::abs(p - theta);
    diff = std::min(diff, kTwoPi - diff);
    if (diff <= tol) return true;
  }
  return false;
}

}  // namespace qudecide

#include "qudecide/ballspec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qudecide/linalg.hpp"

namespace qudecide {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundarySlack = 1e-12;

double wrap_2pi(double phi) {
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  return p;
}

double phase_sum(const std::vector<double>& phases, double theta) {
  double s = 0.0;
  for (double p : phases) {
    const double h = std::sin((p - theta) / 2.0);
    s += h * h;
  }
  return s;
}

// HS distance to alpha I from eigenphases alone.
double center_distance_phases(const std::vector<double>& phases, double theta) {
  // ||U - alpha I||^2 = sum_i |e^{i phi_i} - e^{i theta}|^2
  //                   = 4 sum_i sin^2((phi_i - theta)/2).
  return 2.0 * std::sqrt(phase_sum(phases, theta));
}

}  // namespace

std::vector<CenterElement> center_elements(int d) {
  if (d < 2) throw BadDimensionError("center_elements: d >= 2 required");
  std::vector<CenterElement> out(d);
  for (int m = 0; m < d; ++m) {
    out[m].m = m;
    out[m].theta = 2.0 * m * std::numbers::pi / d;
    out[m].alpha = std::polar(1.0, out[m].theta);
  }
  return out;
}

double distance_to_center(const UnitaryGate& u, const CenterElement& c) {
  const Complex tr = u.matrix.trace();
  const double sq =
      2.0 * u.d - std::real(c.alpha * std::conj(tr) + std::conj(c.alpha) * tr);
  return std::sqrt(std::max(sq, 0.0));
}

BallMembership ball_membership_phases(const std::vector<double>& phases,
                                      int d) {
  BallMembership out;
  double best_dist = std::numeric_limits<double>::infinity();
  for (const auto& c : center_elements(d)) {
    const double s = phase_sum(phases, c.theta);
    if (std::abs(s - 0.125) <= kBoundarySlack) out.boundary_warning = true;
    if (s < 0.125 - kBoundarySlack) {
      const double dist = center_distance_phases(phases, c.theta);
      if (!out.in_ball || dist < best_dist) {
        out.in_ball = true;
        out.center = c;
        best_dist = dist;
      }
    }
  }
  if (out.in_ball) {
    out.distance = best_dist;
  }
  return out;
}

BallMembership ball_membership(const UnitaryGate& u) {
  return ball_membership_phases(eigenphases(u.matrix), u.d);
}

bool in_ball_not_center(const UnitaryGate& u, double tol_center) {
  const BallMembership bm = ball_membership(u);
  if (!bm.in_ball) return false;
  for (const auto& c : center_elements(u.d)) {
    if (distance_to_center(u, c) <= tol_center) return false;
  }
  return true;
}

namespace {

std::optional<int> power_search(const UnitaryGate& u, int n_max,
                                bool exclude_center, double tol_center) {
  if (n_max < 1) throw InvalidInputError("power search: n_max >= 1 required");
  const std::vector<double> phases = eigenphases(u.matrix);
  std::vector<double> np(phases.size());
  for (int n = 1; n <= n_max; ++n) {
    for (size_t i = 0; i < phases.size(); ++i) np[i] = wrap_2pi(n * phases[i]);
    const BallMembership bm = ball_membership_phases(np, u.d);
    if (!bm.in_ball) continue;
    if (!exclude_center) return n;
    bool central = false;
    for (const auto& c : center_elements(u.d)) {
      if (center_distance_phases(np, c.theta) <= tol_center) {
        central = true;
        break;
      }
    }
    if (!central) return n;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> power_into_ball(const UnitaryGate& u, int n_max) {
  return power_search(u, n_max, /*exclude_center=*/false, 0.0);
}

std::optional<int> power_into_ball_not_center(const UnitaryGate& u, int n_max,
                                              double tol_center) {
  return power_search(u, n_max, /*exclude_center=*/true, tol_center);
}

SpectrumClass is_exceptional_spectrum(const UnitaryGate& u, int n_bound) {
  if (n_bound < 1) {
    throw InvalidInputError("is_exceptional_spectrum: n_bound >= 1 required");
  }
  SpectrumClass out;
  out.phases = eigenphases(u.matrix);
  out.n_power = power_into_ball(u, n_bound);
  if (ball_membership_phases(out.phases, u.d).in_ball) {
    out.exceptional = false;  // Exceptionality presupposes U outside the balls.
    return out;
  }
  constexpr double kPhaseTol = 1e-9;
  for (int n = 1; n <= n_bound && !out.exceptional; ++n) {
    for (const auto& c : center_elements(u.d)) {
      bool all_match = true;
      for (double p : out.phases) {
        double diff = std::abs(wrap_2pi(n * p) - c.theta);
        diff = std::min(diff, kTwoPi - diff);
        if (diff > kPhaseTol) {
          all_match = false;
          break;
        }
      }
      if (all_match) {
        out.exceptional = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace qudecide

#pragma once

#include <optional>
#include <vector>

#include "qudecide/types.hpp"

namespace qudecide {

/// A center element alpha_m I with alpha_m = e^{i 2 m pi / d}.
struct CenterElement {
  int m = 0;
  double theta = 0.0;
  Complex alpha{1.0, 0.0};
};

struct BallMembership {
  bool in_ball = false;
  std::optional<CenterElement> center;
  double distance = 0.0;
  /// Set when some center's eigenphase sum lands within 1e-12 of the 1/8
  /// boundary; such values are classified out-of-ball.
  bool boundary_warning = false;
};

struct SpectrumClass {
  std::vector<double> phases;
  bool exceptional = false;
  std::optional<int> n_power;
};

std::vector<CenterElement> center_elements(int d);

/// ||U - alpha I|| via the trace identity
/// ||U - alpha_m I||^2 = 2 tr I - alpha_m tr U^dagger - conj(alpha_m) tr U.
double distance_to_center(const UnitaryGate& u, const CenterElement& c);

/// Eigenphase ball criterion: U in B_alpha_m iff
/// sum_i sin^2((phi_i - theta_m)/2) < 1/8 (strict). Reports the nearest
/// qualifying center.
BallMembership ball_membership(const UnitaryGate& u);

/// Phase-only variant used on powers: phases are the eigenphases of the
/// matrix under test.
BallMembership ball_membership_phases(const std::vector<double>& phases, int d);

/// True iff U lies in some B_alpha strictly and its distance to every center
/// exceeds tol_center.
bool in_ball_not_center(const UnitaryGate& u, double tol_center = kTolCenter);

/// Smallest 1 <= n <= n_max with U^n in the ball union; nullopt if none.
std::optional<int> power_into_ball(const UnitaryGate& u, int n_max);

/// Smallest 1 <= n <= n_max with U^n in the ball union but away from every
/// center by more than tol_center; nullopt if none. This is the step-2 search.
std::optional<int> power_into_ball_not_center(const UnitaryGate& u, int n_max,
                                              double tol_center = kTolCenter);

/// Exceptional-spectrum classification: exceptional iff U is outside the ball union
/// and all eigenphases satisfy e^{i n phi_i} = alpha for one common center
/// alpha and some 1 <= n <= n_bound (phase tolerance 1e-9).
SpectrumClass is_exceptional_spectrum(const UnitaryGate& u, int n_bound);

}  // namespace qudecide

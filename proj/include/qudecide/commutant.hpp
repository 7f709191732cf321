#pragma once

#include <optional>
#include <vector>

#include "qudecide/types.hpp"

namespace qudecide {

/// Ordered list of same-dimension gates with unique names.
struct GateSet {
  int d = 0;
  std::vector<UnitaryGate> gates;

  /// Throws InvalidInputError on empty sets, mixed dimensions or duplicate
  /// names.
  void validate() const;
};

struct CommutantReport {
  int kernel_dim = 0;
  bool trivial = false;
  /// Present when kernel_dim >= 2: a matrix commuting with every Ad_{U_i},
  /// orthogonalized against the identity direction and HS-normalized.
  std::optional<RealMatrix> witness;
};

/// Vertical stack of blocks I (x) Ad_{U_i} - Ad_{U_i^dagger} (x) I, one per
/// gate, n(d^2-1)^2 x (d^2-1)^2.
RealMatrix build_MS(const GateSet& s);

/// Necessary condition: trivial commutant iff ker(M_S) is one-dimensional.
CommutantReport necessary_condition(const GateSet& s,
                                    double tol_rank = kTolRank);

}  // namespace qudecide

#pragma once

#include <vector>

#include "qudecide/types.hpp"

namespace qudecide {

/// Orthonormal basis of su(d) under (X|Y) = -1/2 tr(XY): i times the
/// generalized Gell-Mann matrices, ordered symmetric off-diagonal pairs
/// (row-major), then antisymmetric pairs, then diagonal elements. For d = 2
/// this yields (i*sigma1, i*sigma2, i*sigma3) = (Y, X, Z).
/// Cached per d; the returned reference stays valid for the process lifetime.
const std::vector<ComplexMatrix>& su_basis(int d);

/// Adjoint representation matrix: (Ad_U)_{ij} = -1/2 tr(X_i U X_j U^-1),
/// a (d^2-1) x (d^2-1) real orthogonal matrix with det 1.
RealMatrix adjoint_of(const UnitaryGate& u);

}  // namespace qudecide

#pragma once

#include <random>
#include <vector>

#include "qudecide/types.hpp"

namespace qudecide {

/// Hilbert-Schmidt norm sqrt(tr M M†).
double hs_norm(const ComplexMatrix& m);

/// Phases of the spectrum of a unitary, each in [0, 2pi), sorted ascending.
/// Throws NotUnitaryError beyond tolerance.
std::vector<double> eigenphases(const ComplexMatrix& u,
                                double tol = kTolUnitary);

/// Number of singular values <= tol_rank * sigma_max. Zero matrix -> cols.
int kernel_dimension(const RealMatrix& m, double tol_rank = kTolRank);
int kernel_dimension(const ComplexMatrix& m, double tol_rank = kTolRank);

/// Column-major stacking of the matrix entries.
ComplexVector vectorize(const ComplexMatrix& m);
RealVector vectorize(const RealMatrix& m);

/// U1 U2 U1^-1 U2^-1. Throws DimensionMismatchError.
UnitaryGate group_commutator(const UnitaryGate& u1, const UnitaryGate& u2);

/// Nearest special-unitary matrix: polar unitary factor rescaled by a d-th
/// root of its inverse determinant. Throws SingularMatrixError when the
/// smallest singular value is below 1e-12.
ComplexMatrix project_to_special_unitary(const ComplexMatrix& m);

/// Haar-random special unitary via QR of a Gaussian matrix with phase
/// correction of the R diagonal, then determinant normalization.
ComplexMatrix haar_special_unitary(int d, std::mt19937_64& rng);

}  // namespace qudecide

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace qudecide {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Default tolerances shared across modules.
inline constexpr double kTolUnitary = 1e-8;
inline constexpr double kTolRank = 1e-9;
inline constexpr double kTolEq = 1e-8;
inline constexpr double kTolCenter = 1e-8;

struct NotUnitaryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUnitAxisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CommutingPairError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadDimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GroupTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A named special-unitary matrix. Construct through checked() so the
/// unitarity and det-1 invariants hold within tolerance.
struct UnitaryGate {
  std::string name;
  int d = 0;
  ComplexMatrix matrix;

  static UnitaryGate checked(std::string name, ComplexMatrix m,
                             double tol = kTolUnitary);
};

/// HS deviation from the special-unitary invariants; used by checked().
double special_unitary_defect(const ComplexMatrix& m);

}  // namespace qudecide

#include "qudecide/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace qudecide {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double special_unitary_defect(const ComplexMatrix& m) {
  const int d = static_cast<int>(m.rows());
  const double unitarity =
      (m.adjoint() * m - ComplexMatrix::Identity(d, d)).norm();
  const double det_defect = std::abs(m.determinant() - Complex{1.0, 0.0});
  return std::max(unitarity, det_defect);
}

UnitaryGate UnitaryGate::checked(std::string name, ComplexMatrix m,
                                 double tol) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw DimensionMismatchError("gate '" + name + "' must be square, d >= 2");
  }
  if (!m.allFinite()) {
    throw InvalidInputError("gate '" + name + "' has non-finite entries");
  }
  if (special_unitary_defect(m) > tol) {
    throw NotUnitaryError("gate '" + name +
                          "' is not special-unitary within tolerance");
  }
  UnitaryGate g;
  g.name = std::move(name);
  g.d = static_cast<int>(m.rows());
  g.matrix = std::move(m);
  return g;
}

double hs_norm(const ComplexMatrix& m) { return m.norm(); }

std::vector<double> eigenphases(const ComplexMatrix& u, double tol) {
  if (u.rows() != u.cols()) {
    throw DimensionMismatchError("eigenphases: matrix must be square");
  }
  const int d = static_cast<int>(u.rows());
  if ((u.adjoint() * u - ComplexMatrix::Identity(d, d)).norm() > tol) {
    throw NotUnitaryError("eigenphases: matrix is not unitary");
  }
  Eigen::ComplexEigenSolver<ComplexMatrix> es(u, /*computeEigenvectors=*/false);
  std::vector<double> phases(d);
  for (int i = 0; i < d; ++i) {
    double p = std::arg(es.eigenvalues()(i));
    p = std::fmod(p, kTwoPi);
    if (p < 0.0) p += kTwoPi;
    if (p >= kTwoPi) p = 0.0;
    phases[i] = p;
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

namespace {
template <typename Matrix>
int kernel_dimension_impl(const Matrix& m, double tol_rank) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw InvalidInputError("kernel_dimension: empty matrix");
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  if (smax == 0.0) return static_cast<int>(m.cols());
  int count = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) <= tol_rank * smax) ++count;
  }
  // Singular values only exist up to min(rows, cols); a wide matrix has the
  // remaining cols in the kernel unconditionally.
  count += static_cast<int>(m.cols()) - static_cast<int>(sv.size());
  return count;
}
}  // namespace

int kernel_dimension(const RealMatrix& m, double tol_rank) {
  return kernel_dimension_impl(m, tol_rank);
}

int kernel_dimension(const ComplexMatrix& m, double tol_rank) {
  return kernel_dimension_impl(m, tol_rank);
}

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

RealVector vectorize(const RealMatrix& m) {
  return Eigen::Map<const RealVector>(m.data(), m.size());
}

UnitaryGate group_commutator(const UnitaryGate& u1, const UnitaryGate& u2) {
  if (u1.d != u2.d) {
    throw DimensionMismatchError("group_commutator: dimension mismatch");
  }
  ComplexMatrix c =
      u1.matrix * u2.matrix * u1.matrix.adjoint() * u2.matrix.adjoint();
  return UnitaryGate::checked("[" + u1.name + "," + u2.name + "]", std::move(c),
                              1e-6);
}

ComplexMatrix project_to_special_unitary(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatchError("project_to_special_unitary: square required");
  }
  const int d = static_cast<int>(m.rows());
  Eigen::JacobiSVD<ComplexMatrix> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(d - 1) < 1e-12) {
    throw SingularMatrixError("project_to_special_unitary: singular input");
  }
  ComplexMatrix q = svd.matrixU() * svd.matrixV().adjoint();
  const double theta = std::arg(q.determinant());
  q *= std::polar(1.0, -theta / d);
  return q;
}

ComplexMatrix haar_special_unitary(int d, std::mt19937_64& rng) {
  if (d < 2) throw BadDimensionError("haar_special_unitary: d >= 2 required");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      z(i, j) = Complex{gauss(rng), gauss(rng)};
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= rjj / std::abs(rjj);
  }
  const double theta = std::arg(q.determinant());
  q *= std::polar(1.0, -theta / d);
  return q;
}

}  // namespace qudecide

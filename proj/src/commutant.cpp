#include "qudecide/commutant.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <unordered_set>

#include "qudecide/adjoint.hpp"
#include "qudecide/linalg.hpp"

namespace qudecide {

namespace {

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace

void GateSet::validate() const {
  if (gates.empty()) throw InvalidInputError("gate set is empty");
  if (d < 2) throw InvalidInputError("gate set dimension must be >= 2");
  std::unordered_set<std::string> names;
  for (const auto& g : gates) {
    if (g.d != d) {
      throw InvalidInputError("gate '" + g.name +
                              "' has mismatched dimension");
    }
    if (!names.insert(g.name).second) {
      throw InvalidInputError("duplicate gate name '" + g.name + "'");
    }
  }
}

RealMatrix build_MS(const GateSet& s) {
  s.validate();
  const int n = s.d * s.d - 1;
  const int n2 = n * n;
  const RealMatrix eye = RealMatrix::Identity(n, n);
  RealMatrix ms(static_cast<int>(s.gates.size()) * n2, n2);
  for (size_t i = 0; i < s.gates.size(); ++i) {
    const RealMatrix ad = adjoint_of(s.gates[i]);
    // Ad_{U^dagger} = Ad_U^T by orthogonality.
    ms.block(static_cast<int>(i) * n2, 0, n2, n2) =
        kron(eye, ad) - kron(ad.transpose(), eye);
  }
  return ms;
}

CommutantReport necessary_condition(const GateSet& s, double tol_rank) {
  const RealMatrix ms = build_MS(s);
  const int n = s.d * s.d - 1;
  const int n2 = n * n;

  Eigen::JacobiSVD<RealMatrix> svd(ms, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  int kdim = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (smax == 0.0 || sv(i) <= tol_rank * smax) ++kdim;
  }
  kdim += n2 - static_cast<int>(sv.size());

  CommutantReport report;
  report.kernel_dim = kdim;
  report.trivial = (kdim == 1);
  if (kdim >= 2) {
    // Kernel basis vectors are the trailing right singular vectors; pick the
    // combination farthest from the identity direction.
    const RealMatrix eye = RealMatrix::Identity(n, n);
    const RealVector id_dir = vectorize(eye).normalized();
    RealVector best;
    double best_resid = -1.0;
    for (int i = n2 - kdim; i < n2; ++i) {
      RealVector v = svd.matrixV().col(i);
      v -= id_dir * id_dir.dot(v);
      const double resid = v.norm();
      if (resid > best_resid) {
        best_resid = resid;
        best = v;
      }
    }
    if (best_resid > 1e-12) {
      best /= best.norm();
      report.witness = Eigen::Map<const RealMatrix>(best.data(), n, n);
    }
  }
  return report;
}

}  // namespace qudecide

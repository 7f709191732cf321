#include "qudecide/adjoint.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace qudecide {

namespace {

const Complex kI{0.0, 1.0};

std::vector<ComplexMatrix> build_basis(int d) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d - 1);
  // Symmetric pairs: i(E_jk + E_kj).
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = kI;
      m(k, j) = kI;
      basis.push_back(std::move(m));
    }
  }
  // Antisymmetric pairs: E_jk - E_kj (equals i times the Gell-Mann sigma2-type).
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = 1.0;
      m(k, j) = -1.0;
      basis.push_back(std::move(m));
    }
  }
  // Diagonal: i * sqrt(2/(l(l+1))) (sum_{m<l} E_mm - l E_ll).
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = kI * scale;
    m(l, l) = -kI * scale * static_cast<double>(l);
    basis.push_back(std::move(m));
  }
  return basis;
}

}  // namespace

const std::vector<ComplexMatrix>& su_basis(int d) {
  if (d < 2) throw BadDimensionError("su_basis: d >= 2 required");
  static std::mutex mutex;
  static std::map<int, std::vector<ComplexMatrix>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    it = cache.emplace(d, build_basis(d)).first;
  }
  return it->second;
}

RealMatrix adjoint_of(const UnitaryGate& u) {
  const auto& basis = su_basis(u.d);
  const int n = static_cast<int>(basis.size());
  const ComplexMatrix uinv = u.matrix.adjoint();
  RealMatrix ad(n, n);
  for (int j = 0; j < n; ++j) {
    const ComplexMatrix conj = u.matrix * basis[j] * uinv;
    for (int i = 0; i < n; ++i) {
      ad(i, j) = -0.5 * (basis[i] * conj).trace().real();
    }
  }
  return ad;
}

}  // namespace qudecide

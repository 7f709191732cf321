#include "qudecide/commutant.hpp"

#include <doctest.h>

#include "qudecide/adjoint.hpp"
#include "qudecide/linalg.hpp"
#include "test_support.hpp"

using namespace qudecide;
using namespace qudecide::test;

TEST_CASE("GateSet validation") {
  GateSet empty;
  empty.d = 2;
  CHECK_THROWS_AS(empty.validate(), InvalidInputError);

  std::mt19937_64 rng(61);
  GateSet mixed;
  mixed.d = 2;
  mixed.gates = {hadamard(), haar_gate("g", 3, rng)};
  CHECK_THROWS_AS(mixed.validate(), InvalidInputError);

  GateSet dup;
  dup.d = 2;
  dup.gates = {hadamard(), hadamard()};
  CHECK_THROWS_AS(dup.validate(), InvalidInputError);

  CHECK_NOTHROW(h_t_set(0.3).validate());
}

TEST_CASE("build_MS shape and kernel identities") {
  const GateSet s = h_t_set(kPi / 8);
  const RealMatrix m = build_MS(s);
  CHECK(m.rows() == 2 * 9);
  CHECK(m.cols() == 9);

  // vec(I) is always in the kernel.
  RealMatrix eye = RealMatrix::Identity(3, 3);
  Eigen::VectorXd v(9);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) v(3 * j + i) = eye(i, j);
  }
  CHECK((m * v).norm() < 1e-12);

  // M_S x = 0 iff X Ad_U = Ad_U X for every gate: verify on each kernel
  // direction via an explicit commutator check.
  const GateSet commuting = make_set(2, {phase_gate(0.3, "T1"), phase_gate(1.1, "T2")});
  const RealMatrix mc = build_MS(commuting);
  Eigen::JacobiSVD<RealMatrix> svd(mc, Eigen::ComputeFullV);
  const int kdim = kernel_dimension(mc);
  CHECK(kdim >= 2);
  for (int k = 0; k < kdim; ++k) {
    const Eigen::VectorXd x = svd.matrixV().col(9 - 1 - k);
    RealMatrix xm(3, 3);
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < 3; ++i) xm(i, j) = x(3 * j + i);
    }
    for (const auto& g : commuting.gates) {
      const RealMatrix ad = adjoint_of(g);
      CHECK((xm * ad - ad * xm).norm() < 1e-9);
    }
  }
}

TEST_CASE("necessary_condition on known sets") {
  // H and T_{pi/8} have a trivial commutant.
  const CommutantReport good = necessary_condition(h_t_set(kPi / 8));
  CHECK(good.kernel_dim == 1);
  CHECK(good.trivial);
  CHECK_FALSE(good.witness.has_value());

  // A single diagonal gate commutes with every diagonal: kernel is larger.
  const CommutantReport diag =
      necessary_condition(make_set(2, {phase_gate(0.3)}));
  CHECK(diag.kernel_dim > 1);
  CHECK_FALSE(diag.trivial);
  REQUIRE(diag.witness.has_value());

  // Two commuting gates likewise fail.
  const CommutantReport pair = necessary_condition(
      make_set(2, {phase_gate(0.3, "T1"), phase_gate(1.1, "T2")}));
  CHECK_FALSE(pair.trivial);
  CHECK(pair.kernel_dim > 1);
}

TEST_CASE("witness commutes with every adjoint and is not scalar") {
  const GateSet s = make_set(2, {phase_gate(0.4, "T1"), phase_gate(0.9, "T2")});
  const CommutantReport rep = necessary_condition(s);
  REQUIRE(rep.witness.has_value());
  const RealMatrix& w = *rep.witness;
  CHECK(w.rows() == 3);
  CHECK(w.cols() == 3);
  CHECK(w.norm() == doctest::Approx(1.0).epsilon(1e-9));
  for (const auto& g : s.gates) {
    const RealMatrix ad = adjoint_of(g);
    CHECK((w * ad - ad * w).norm() < 1e-8);
  }
  // Orthogonal to the identity direction, so genuinely non-scalar.
  CHECK(std::abs(w.trace()) / std::sqrt(3.0) < 1e-8);
}

TEST_CASE("Haar pairs generically have trivial commutant") {
  std::mt19937_64 rng(67);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const GateSet s = make_set(
          d, {haar_gate("a", d, rng), haar_gate("b", d, rng)});
      CHECK(necessary_condition(s).trivial);
    }
  }
}

TEST_CASE("conjugation invariance of the kernel dimension") {
  std::mt19937_64 rng(71);
  const GateSet s = make_set(2, {phase_gate(0.5, "T1"), phase_gate(1.3, "T2")});
  const int base = necessary_condition(s).kernel_dim;
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix v = haar_special_unitary(2, rng);
    std::vector<UnitaryGate> conj;
    for (const auto& g : s.gates) {
      conj.push_back(
          gate(g.name, (v * g.matrix * v.adjoint()).eval()));
    }
    CHECK(necessary_condition(make_set(2, std::move(conj))).kernel_dim == base);
  }
}

TEST_CASE("adding a generic gate shrinks a nontrivial kernel") {
  std::mt19937_64 rng(73);
  GateSet s = make_set(2, {phase_gate(0.5)});
  const int before = necessary_condition(s).kernel_dim;
  s.gates.push_back(haar_gate("r", 2, rng));
  s.validate();
  const int after = necessary_condition(s).kernel_dim;
  CHECK(after <= before);
  CHECK(after == 1);
}

TEST_CASE("single-qutrit pair from Haar passes the necessary condition") {
  std::mt19937_64 rng(79);
  const GateSet s = make_set(
      3, {haar_gate("a", 3, rng), haar_gate("b", 3, rng)});
  const RealMatrix m = build_MS(s);
  CHECK(m.rows() == 2 * 64);
  CHECK(m.cols() == 64);
  CHECK(kernel_dimension(m) == 1);
}

#include "qudecide/oracle.hpp"

#include <doctest.h>

#include "qudecide/linalg.hpp"
#include "test_support.hpp"

using namespace qudecide;
using namespace qudecide::test;

TEST_CASE("closure of cyclic groups") {
  // <T_{pi/3}>: 6th power is I, 3rd is -I; order 6.
  const ClosureResult c6 = closure_enumerate(make_set(2, {phase_gate(kPi / 3)}));
  CHECK_FALSE(c6.overflowed);
  CHECK(c6.order == 6);
  CHECK(c6.elements.size() == 6);

  // <T_{pi/5}>: order 10.
  const ClosureResult c10 =
      closure_enumerate(make_set(2, {phase_gate(kPi / 5)}));
  CHECK(c10.order == 10);
}

TEST_CASE("closure contains the identity and is closed under products") {
  const ClosureResult c = closure_enumerate(h_t_set(kPi / 2));
  CHECK_FALSE(c.overflowed);
  // <H, T_{pi/2}> is dicyclic of order 16.
  CHECK(c.order == 16);
  CHECK(c.order == static_cast<int>(c.elements.size()));

  bool has_identity = false;
  for (const auto& e : c.elements) {
    CHECK(special_unitary_defect(e) < 1e-8);
    if (hs_norm(e - ComplexMatrix::Identity(2, 2)) < 1e-8) {
      has_identity = true;
    }
  }
  CHECK(has_identity);

  // Spot-check closure: random products of elements stay inside.
  std::mt19937_64 rng(109);
  std::uniform_int_distribution<std::size_t> pick(0, c.elements.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix p = project_to_special_unitary(
        c.elements[pick(rng)] * c.elements[pick(rng)]);
    bool found = false;
    for (const auto& e : c.elements) {
      if (hs_norm(e - p) < 1e-6) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("closure orders for the Clifford-like family") {
  CHECK(closure_enumerate(h_t_set(kPi)).order == 4);
  CHECK(closure_enumerate(h_t_set(kPi / 4)).order == 48);
}

TEST_CASE("closure overflows on infinite groups") {
  const ClosureResult c = closure_enumerate(h_t_set(kPi / 8), 200);
  CHECK(c.overflowed);
  CHECK(c.order >= 200);
}

TEST_CASE("closure order is conjugation invariant") {
  std::mt19937_64 rng(113);
  const int base = closure_enumerate(h_t_set(kPi / 4)).order;
  for (int trial = 0; trial < 3; ++trial) {
    const ComplexMatrix v = haar_special_unitary(2, rng);
    std::vector<UnitaryGate> conj;
    for (const auto& g : h_t_set(kPi / 4).gates) {
      conj.push_back(gate(g.name, (v * g.matrix * v.adjoint()).eval()));
    }
    CHECK(closure_enumerate(make_set(2, std::move(conj))).order == base);
  }
}

TEST_CASE("epsilon net coverage improves with word length") {
  const GateSet s = h_t_set(kPi / 8);
  const CoverageReport short_words = epsilon_net_coverage(s, 4, 20, 1234);
  const CoverageReport long_words = epsilon_net_coverage(s, 8, 20, 1234);
  CHECK(short_words.epsilon_target == doctest::Approx(1.0 / (2 * std::sqrt(2.0))));
  CHECK(short_words.word_length_cap == 4);
  CHECK(long_words.max_min_distance <= short_words.max_min_distance + 1e-12);
  CHECK(long_words.max_min_distance > 0.0);
}

TEST_CASE("epsilon net coverage is deterministic in the seed") {
  const GateSet s = h_t_set(kPi / 8);
  const CoverageReport a = epsilon_net_coverage(s, 6, 15, 42);
  const CoverageReport b = epsilon_net_coverage(s, 6, 15, 42);
  CHECK(a.max_min_distance == b.max_min_distance);
  const CoverageReport c = epsilon_net_coverage(s, 6, 15, 43);
  CHECK(a.max_min_distance != c.max_min_distance);
}

TEST_CASE("epsilon net coverage of a finite group is bounded below") {
  // The group generated by {H, T_pi} has only 4 elements up to phase, so the
  // worst-case distance to a Haar sample stays large no matter the cap.
  const CoverageReport r = epsilon_net_coverage(h_t_set(kPi), 10, 30, 7);
  CHECK(r.max_min_distance > r.epsilon_target);
}

TEST_CASE("word cap overflow throws") {
  CHECK_THROWS_AS(epsilon_net_coverage(h_t_set(kPi / 8), 12, 5, 1, 100),
                  GroupTooLargeError);
}

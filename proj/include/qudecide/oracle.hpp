#pragma once

#include <vector>

#include "qudecide/commutant.hpp"
#include "qudecide/types.hpp"

namespace qudecide {

struct ClosureResult {
  std::vector<ComplexMatrix> elements;  // contains I
  int order = 0;
  int generations = 0;
  bool overflowed = false;
};

struct CoverageReport {
  int word_length_cap = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  double max_min_distance = 0.0;  // worst HS distance from a Haar sample
  double epsilon_target = 0.0;    // 1/(2 sqrt 2)
};

/// Brute-force breadth-first closure under multiplication: every generation
/// multiplies all ordered pairs of known elements and keeps the new ones
/// (dedup by HS distance <= tol_eq). Stops at a fixed point or at cap
/// (overflowed = true). Deliberately shares no code with the decider's word
/// expansion.
ClosureResult closure_enumerate(const GateSet& s, int cap = 10000,
                                double tol_eq = kTolEq);

/// Enumerates all words up to word_length_cap, samples Haar-random targets
/// (one independent stream per sample, derived from seed), and reports the
/// worst nearest-word HS distance.
CoverageReport epsilon_net_coverage(const GateSet& s, int word_length_cap,
                                    int samples, std::uint64_t seed,
                                    int max_words = 200000);

}  // namespace qudecide

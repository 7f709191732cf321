#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qudecide/commutant.hpp"
#include "qudecide/types.hpp"

namespace qudecide {

/// A product of generators; letters are indices into the gate set.
struct Word {
  std::vector<int> letters;
  ComplexMatrix product;

  std::vector<std::string> names(const GateSet& s) const;
};

enum class VerdictKind { Universal, FiniteGroup, InfiniteNonUniversal, Inconclusive };

std::string to_string(VerdictKind kind);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  int kernel_dim = 0;
  std::optional<Word> witness;          // Universal: the word landing in B \ Z
  std::optional<int> witness_power;     // power n applied to the witness
  std::optional<int> order;             // FiniteGroup
  std::optional<int> terminating_l;
  std::string reason;                   // Inconclusive
  std::vector<std::string> warnings;
  std::optional<RealMatrix> commutant_witness;  // InfiniteNonUniversal
};

struct DeciderConfig {
  double tol_rank = kTolRank;
  double tol_eq = kTolEq;
  double tol_center = kTolCenter;
  /// <= 0 selects the default: 13 for d = 2, 20 otherwise.
  int max_word_len = 0;
  int max_group_size = 10000;
  /// <= 0 selects the default: 6 for d = 2 (N_SU(2)), 64 otherwise.
  int n_power_max = 0;
  /// <= 0 reads QUDECIDE_THREADS, falling back to 1.
  int threads = 0;

  int effective_max_word_len(int d) const;
  int effective_n_power_max(int d) const;
  int effective_threads() const;
};

/// The three-step universality decision. See the Verdict fields for what each
/// outcome carries.
Verdict decide(const GateSet& s, const DeciderConfig& cfg = {});

/// One expansion round: current plus all right-products word * generator not
/// already present within tol_eq, re-projected to special-unitary, in
/// lexicographic letter order. Throws GroupTooLargeError beyond max_size.
std::vector<Word> expand_words(const std::vector<Word>& current,
                               const GateSet& s, double tol_eq = kTolEq,
                               int max_size = 10000);

/// Human-readable advice for turning a non-universal set universal.
std::string suggest_fix(const GateSet& s, const Verdict& v);

}  // namespace qudecide

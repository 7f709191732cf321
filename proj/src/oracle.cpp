#include "qudecide/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qudecide/linalg.hpp"

namespace qudecide {

namespace {

// Linear-scan dedup with a cheap trace filter; intentionally different from
// the decider's bucketed index.
bool known(const std::vector<ComplexMatrix>& els,
           const std::vector<Complex>& traces, const ComplexMatrix& m,
           double tol) {
  const Complex tr = m.trace();
  const double tr_tol = tol * std::sqrt(static_cast<double>(m.rows())) + 1e-15;
  for (size_t i = 0; i < els.size(); ++i) {
    if (std::abs(traces[i] - tr) > tr_tol) continue;
    if ((els[i] - m).norm() <= tol) return true;
  }
  return false;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

ClosureResult closure_enumerate(const GateSet& s, int cap, double tol_eq) {
  s.validate();
  ClosureResult result;
  std::vector<Complex> traces;
  auto add = [&](const ComplexMatrix& m) {
    if (known(result.elements, traces, m, tol_eq)) return false;
    result.elements.push_back(m);
    traces.push_back(m.trace());
    return true;
  };
  add(ComplexMatrix::Identity(s.d, s.d));
  for (const auto& g : s.gates) add(g.matrix);

  while (true) {
    const size_t before = result.elements.size();
    bool grew = false;
    for (size_t a = 0; a < before && !result.overflowed; ++a) {
      for (size_t b = 0; b < before; ++b) {
        ComplexMatrix prod = project_to_special_unitary(result.elements[a] *
                                                        result.elements[b]);
        if (add(prod)) {
          grew = true;
          if (static_cast<int>(result.elements.size()) >= cap) {
            result.overflowed = true;
            break;
          }
        }
      }
    }
    if (grew) ++result.generations;
    if (!grew || result.overflowed) break;
  }
  result.order = static_cast<int>(result.elements.size());
  return result;
}

CoverageReport epsilon_net_coverage(const GateSet& s, int word_length_cap,
                                    int samples, std::uint64_t seed,
                                    int max_words) {
  s.validate();
  if (samples < 1) {
    throw InvalidInputError("epsilon_net_coverage: samples >= 1 required");
  }
  CoverageReport report;
  report.word_length_cap = word_length_cap;
  report.samples = samples;
  report.seed = seed;
  report.epsilon_target = 1.0 / (2.0 * std::sqrt(2.0));

  // All words of length <= cap, breadth first with dedup.
  std::vector<ComplexMatrix> words;
  std::vector<Complex> traces;
  auto add = [&](const ComplexMatrix& m) {
    if (known(words, traces, m, kTolEq)) return false;
    words.push_back(m);
    traces.push_back(m.trace());
    return true;
  };
  add(ComplexMatrix::Identity(s.d, s.d));
  size_t frontier_begin = 0;
  for (int len = 1; len <= word_length_cap; ++len) {
    const size_t frontier_end = words.size();
    for (size_t w = frontier_begin; w < frontier_end; ++w) {
      for (const auto& g : s.gates) {
        if (static_cast<int>(words.size()) >= max_words) {
          throw GroupTooLargeError("epsilon_net_coverage: word cap exceeded");
        }
        add(project_to_special_unitary(words[w] * g.matrix));
      }
    }
    frontier_begin = frontier_end;
  }

  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    // Stride by an odd constant so nearby seeds share no sample streams
    // (seed ^ i would alias seed and seed + 1 for small i).
    std::mt19937_64 rng(splitmix64(
        seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i)));
    const ComplexMatrix target = haar_special_unitary(s.d, rng);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& w : words) {
      best = std::min(best, (w - target).norm());
    }
    worst = std::max(worst, best);
  }
  report.max_min_distance = worst;
  return report;
}

}  // namespace qudecide

#include "qudecide/decider.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "qudecide/ballspec.hpp"
#include "qudecide/linalg.hpp"
#include "qudecide/su2geom.hpp"

namespace qudecide {

namespace {

// Bucketed dedup index keyed on the quantized trace; closeness in HS norm
// bounds the trace difference by sqrt(d) * tol, so matching elements land in
// the same or a neighboring bucket.
class ElementIndex {
 public:
  ElementIndex(double tol, int d)
      : tol_(tol), width_(10.0 * tol * std::sqrt(static_cast<double>(d))) {}

  std::optional<int> find(const ComplexMatrix& m,
                          const std::vector<Word>& words) const {
    const Complex tr = m.trace();
    const std::int64_t kr = std::llround(std::real(tr) / width_);
    const std::int64_t ki = std::llround(std::imag(tr) / width_);
    for (std::int64_t dr = -1; dr <= 1; ++dr) {
      for (std::int64_t di = -1; di <= 1; ++di) {
        const auto it = buckets_.find(key(kr + dr, ki + di));
        if (it == buckets_.end()) continue;
        for (int idx : it->second) {
          if ((words[idx].product - m).norm() <= tol_) return idx;
        }
      }
    }
    return std::nullopt;
  }

  void insert(const ComplexMatrix& m, int idx) {
    const Complex tr = m.trace();
    buckets_[key(std::llround(std::real(tr) / width_),
                 std::llround(std::imag(tr) / width_))]
        .push_back(idx);
  }

 private:
  static std::uint64_t key(std::int64_t kr, std::int64_t ki) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(kr)) << 32) |
           static_cast<std::uint32_t>(ki);
  }

  double tol_;
  double width_;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

UnitaryGate as_gate(const ComplexMatrix& m) {
  UnitaryGate g;
  g.name = "w";
  g.d = static_cast<int>(m.rows());
  g.matrix = m;
  return g;
}

}  // namespace

std::vector<std::string> Word::names(const GateSet& s) const {
  std::vector<std::string> out;
  out.reserve(letters.size());
  for (int i : letters) out.push_back(s.gates[static_cast<size_t>(i)].name);
  return out;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Universal: return "universal";
    case VerdictKind::FiniteGroup: return "finite_group";
    case VerdictKind::InfiniteNonUniversal: return "not_universal_commutant";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

int DeciderConfig::effective_max_word_len(int d) const {
  if (max_word_len > 0) return max_word_len;
  return d == 2 ? 13 : 20;
}

int DeciderConfig::effective_n_power_max(int d) const {
  if (n_power_max > 0) return n_power_max;
  return d == 2 ? 6 : 64;
}

int DeciderConfig::effective_threads() const {
  if (threads > 0) return threads;
  if (const char* env = std::getenv("QUDECIDE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

Verdict decide(const GateSet& s, const DeciderConfig& cfg) {
  s.validate();
  const int d = s.d;
  const int n_power_max = cfg.effective_n_power_max(d);
  const int max_word_len = cfg.effective_max_word_len(d);
  const int nthreads = cfg.effective_threads();

  Verdict verdict;
  if (d == 2 && s.gates.size() > 2 && max_word_len == 13) {
    verdict.warnings.push_back(
        "word-length cap 13 is proven for two-generator SU(2) sets only");
  }

  // Step 1: necessary condition via the kernel of M_S.
  const CommutantReport report = necessary_condition(s, cfg.tol_rank);
  verdict.kernel_dim = report.kernel_dim;
  if (!report.trivial) {
    verdict.kind = VerdictKind::InfiniteNonUniversal;
    verdict.commutant_witness = report.witness;
    return verdict;
  }

  // Fast path for d = 2: a generator with a nonexceptional spectrum, or one
  // already strictly inside the ball union away from the center, settles
  // universality at l = 1.
  if (d == 2) {
    for (size_t i = 0; i < s.gates.size(); ++i) {
      const UnitaryGate& g = s.gates[i];
      const bool inside = in_ball_not_center(g, cfg.tol_center);
      const bool nonexceptional =
          !ball_membership(g).in_ball &&
          !is_exceptional_angle(axis_angle_from_su2(g).phi);
      if (inside || nonexceptional) {
        verdict.kind = VerdictKind::Universal;
        verdict.terminating_l = 1;
        verdict.witness = Word{{static_cast<int>(i)}, g.matrix};
        verdict.witness_power =
            inside ? 1
                   : power_into_ball_not_center(g, n_power_max, cfg.tol_center)
                         .value_or(1);
        return verdict;
      }
    }
  }

  // Steps 2 and 3: power search over the known elements, then word expansion.
  std::vector<Word> words;
  ElementIndex index(cfg.tol_eq, d);
  std::vector<int> frontier;
  for (size_t i = 0; i < s.gates.size(); ++i) {
    const ComplexMatrix& m = s.gates[i].matrix;
    if (index.find(m, words)) continue;
    index.insert(m, static_cast<int>(words.size()));
    frontier.push_back(static_cast<int>(words.size()));
    words.push_back(Word{{static_cast<int>(i)}, m});
  }

  std::vector<int> unchecked = frontier;
  int l = 1;
  for (;;) {
    // Step 2: does any new element reach B \ Z(SU(d)) under powers?
    std::vector<std::optional<int>> hits(unchecked.size());
    parallel_for(static_cast<int>(unchecked.size()), nthreads, [&](int i) {
      hits[static_cast<size_t>(i)] = power_into_ball_not_center(
          as_gate(words[static_cast<size_t>(unchecked[static_cast<size_t>(i)])]
                      .product),
          n_power_max, cfg.tol_center);
    });
    for (size_t i = 0; i < unchecked.size(); ++i) {
      if (hits[i]) {
        verdict.kind = VerdictKind::Universal;
        verdict.terminating_l = l;
        verdict.witness = words[static_cast<size_t>(unchecked[i])];
        verdict.witness_power = *hits[i];
        return verdict;
      }
    }

    ++l;
    if (l > max_word_len) {
      verdict.kind = VerdictKind::Inconclusive;
      std::ostringstream os;
      os << "no decision after expanding words up to length " << max_word_len;
      verdict.reason = os.str();
      return verdict;
    }

    // Step 3: expand the frontier by one generator on the right.
    const int ng = static_cast<int>(s.gates.size());
    const int ncand = static_cast<int>(frontier.size()) * ng;
    std::vector<ComplexMatrix> products(static_cast<size_t>(ncand));
    parallel_for(ncand, nthreads, [&](int c) {
      const int w = frontier[static_cast<size_t>(c / ng)];
      const int g = c % ng;
      products[static_cast<size_t>(c)] = project_to_special_unitary(
          words[static_cast<size_t>(w)].product *
          s.gates[static_cast<size_t>(g)].matrix);
    });
    std::vector<int> next;
    for (int c = 0; c < ncand; ++c) {
      ComplexMatrix& m = products[static_cast<size_t>(c)];
      if (index.find(m, words)) continue;
      if (static_cast<int>(words.size()) >= cfg.max_group_size) {
        verdict.kind = VerdictKind::Inconclusive;
        std::ostringstream os;
        os << "element count exceeded max_group_size = " << cfg.max_group_size;
        verdict.reason = os.str();
        return verdict;
      }
      const int w = frontier[static_cast<size_t>(c / ng)];
      std::vector<int> letters = words[static_cast<size_t>(w)].letters;
      letters.push_back(c % ng);
      index.insert(m, static_cast<int>(words.size()));
      next.push_back(static_cast<int>(words.size()));
      words.push_back(Word{std::move(letters), std::move(m)});
    }
    if (next.empty()) {
      verdict.kind = VerdictKind::FiniteGroup;
      verdict.order = static_cast<int>(words.size());
      verdict.terminating_l = l;
      return verdict;
    }
    frontier = std::move(next);
    unchecked = frontier;
  }
}

std::vector<Word> expand_words(const std::vector<Word>& current,
                               const GateSet& s, double tol_eq, int max_size) {
  if (current.empty()) {
    throw InvalidInputError("expand_words: current word list is empty");
  }
  std::vector<Word> out;
  out.reserve(current.size());
  ElementIndex index(tol_eq, s.d);
  for (const Word& w : current) {
    if (index.find(w.product, out)) continue;
    index.insert(w.product, static_cast<int>(out.size()));
    out.push_back(w);
  }
  const size_t base = out.size();
  for (size_t i = 0; i < base; ++i) {
    for (size_t g = 0; g < s.gates.size(); ++g) {
      ComplexMatrix m =
          project_to_special_unitary(out[i].product * s.gates[g].matrix);
      if (index.find(m, out)) continue;
      if (static_cast<int>(out.size()) >= max_size) {
        throw GroupTooLargeError("expand_words: exceeded max size");
      }
      std::vector<int> letters = out[i].letters;
      letters.push_back(static_cast<int>(g));
      index.insert(m, static_cast<int>(out.size()));
      out.push_back(Word{std::move(letters), std::move(m)});
    }
  }
  return out;
}

std::string suggest_fix(const GateSet& s, const Verdict& v) {
  if (v.kind == VerdictKind::Universal) {
    return "set is already universal; nothing to fix";
  }
  std::ostringstream os;
  if (s.d == 2) {
    os << "add one gate U(gamma, k) with gamma not an exceptional angle "
          "(not of the form q*pi with denominator <= 6) and axis k neither "
          "parallel nor orthogonal to any of:";
    for (const auto& g : s.gates) {
      const AxisAngle a = axis_angle_from_su2(g);
      os << " " << g.name << "=(" << a.k.x() << ", " << a.k.y() << ", "
         << a.k.z() << ")";
    }
  } else {
    os << "add one gate whose adjoint matrix does not commute with the "
          "reported commutant witness";
    if (v.commutant_witness) {
      os << " (witness matrix of size " << v.commutant_witness->rows() << "x"
         << v.commutant_witness->cols() << " attached to the verdict)";
    }
  }
  return os.str();
}

}  // namespace qudecide

#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qudecide/commutant.hpp"
#include "qudecide/decider.hpp"

namespace qudecide {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a gate-set document:
///   {"d": 2, "gates": [{"name": "H", "builtin": "H"},
///                      {"name": "T", "builtin": "phase", "phi": 0.6},
///                      {"name": "U", "matrix": [[[re, im], ...], ...]},
///                      {"name": "V", "axis_angle": {"phi": 1.0, "k": [x,y,z]}}]}
/// Each gate carries exactly one of matrix / builtin / axis_angle. With
/// project = true, near-unitary matrix entries are repaired by projection
/// instead of rejected.
GateSet parse_gateset(const std::string& text, bool project = false);

std::string serialize_gateset(const GateSet& s);

/// Machine-readable verdict document (stable field set per verdict kind).
nlohmann::json verdict_to_json(const Verdict& v, const GateSet& s,
                               const DeciderConfig& cfg);

/// 0 universal, 10 finite group, 11 not universal by commutant,
/// 12 inconclusive.
int exit_code_for(const Verdict& v);

}  // namespace qudecide

#include "qudecide/io.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "qudecide/linalg.hpp"
#include "qudecide/su2geom.hpp"

namespace qudecide {

using nlohmann::json;

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix builtin_hadamard() {
  ComplexMatrix m(2, 2);
  m << 1, 1, 1, -1;
  return (kI / std::sqrt(2.0)) * m;
}

ComplexMatrix builtin_phase(double phi) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -phi);
  m(1, 1) = std::polar(1.0, phi);
  return m;
}

ComplexMatrix parse_matrix(const json& rows, int d, const std::string& name) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw ParseError("gate '" + name + "': matrix must have " +
                     std::to_string(d) + " rows");
  }
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    const json& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != d) {
      throw ParseError("gate '" + name + "': row " + std::to_string(i) +
                       " must have " + std::to_string(d) + " entries");
    }
    for (int j = 0; j < d; ++j) {
      const json& e = row[static_cast<size_t>(j)];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() ||
          !e[1].is_number()) {
        throw ParseError("gate '" + name + "': entry (" + std::to_string(i) +
                         "," + std::to_string(j) +
                         ") must be a [re, im] pair");
      }
      m(i, j) = Complex{e[0].get<double>(), e[1].get<double>()};
    }
  }
  return m;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

GateSet parse_gateset(const std::string& text, bool project) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") ||
      !doc["d"].is_number_integer() || !doc.contains("gates") ||
      !doc["gates"].is_array()) {
    throw ParseError("document must be {\"d\": int, \"gates\": [...]}");
  }
  GateSet s;
  s.d = doc["d"].get<int>();
  if (s.d < 2) throw ParseError("d must be >= 2");
  for (const json& entry : doc["gates"]) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry["name"].is_string()) {
      throw ParseError("each gate needs a string name");
    }
    const std::string name = entry["name"].get<std::string>();
    const int sources = entry.contains("matrix") + entry.contains("builtin") +
                        entry.contains("axis_angle");
    if (sources != 1) {
      throw ParseError("gate '" + name +
                       "': exactly one of matrix/builtin/axis_angle required");
    }
    ComplexMatrix m;
    if (entry.contains("builtin")) {
      const std::string kind = entry["builtin"].get<std::string>();
      if (s.d != 2) {
        throw ParseError("gate '" + name + "': builtins require d = 2");
      }
      if (kind == "H") {
        m = builtin_hadamard();
      } else if (kind == "phase") {
        if (!entry.contains("phi") || !entry["phi"].is_number()) {
          throw ParseError("gate '" + name + "': phase builtin needs phi");
        }
        m = builtin_phase(entry["phi"].get<double>());
      } else {
        throw ParseError("gate '" + name + "': unknown builtin '" + kind +
                         "'");
      }
    } else if (entry.contains("axis_angle")) {
      if (s.d != 2) {
        throw ParseError("gate '" + name + "': axis_angle requires d = 2");
      }
      const json& aa = entry["axis_angle"];
      if (!aa.is_object() || !aa.contains("phi") || !aa.contains("k") ||
          !aa["k"].is_array() || aa["k"].size() != 3) {
        throw ParseError("gate '" + name +
                         "': axis_angle needs {phi, k: [x, y, z]}");
      }
      AxisAngle a;
      a.phi = aa["phi"].get<double>();
      a.k = Eigen::Vector3d(aa["k"][0].get<double>(), aa["k"][1].get<double>(),
                            aa["k"][2].get<double>());
      try {
        m = su2_from_axis_angle(a).matrix;
      } catch (const NonUnitAxisError&) {
        throw ValidationError("gate '" + name + "': axis is not a unit vector");
      }
    } else {
      m = parse_matrix(entry["matrix"], s.d, name);
      if (project) {
        m = project_to_special_unitary(m);
      }
    }
    try {
      s.gates.push_back(UnitaryGate::checked(name, std::move(m)));
    } catch (const std::runtime_error& e) {
      throw ValidationError(e.what());
    }
  }
  try {
    s.validate();
  } catch (const InvalidInputError& e) {
    throw ValidationError(e.what());
  }
  return s;
}

std::string serialize_gateset(const GateSet& s) {
  json doc;
  doc["d"] = s.d;
  doc["gates"] = json::array();
  for (const auto& g : s.gates) {
    doc["gates"].push_back({{"name", g.name}, {"matrix", matrix_to_json(g.matrix)}});
  }
  return doc.dump(2);
}

json verdict_to_json(const Verdict& v, const GateSet& s,
                     const DeciderConfig& cfg) {
  json out;
  out["verdict"] = to_string(v.kind);
  out["kernel_dim"] = v.kernel_dim;
  out["warnings"] = v.warnings;
  switch (v.kind) {
    case VerdictKind::Universal:
      out["terminating_l"] = v.terminating_l.value_or(0);
      out["witness_word"] = v.witness ? json(v.witness->names(s)) : json();
      out["witness_power"] = v.witness_power.value_or(0);
      break;
    case VerdictKind::FiniteGroup:
      out["order"] = v.order.value_or(0);
      out["terminating_l"] = v.terminating_l.value_or(0);
      break;
    case VerdictKind::InfiniteNonUniversal:
      out["suggestion"] = suggest_fix(s, v);
      break;
    case VerdictKind::Inconclusive:
      out["reason"] = v.reason;
      break;
  }
  out["config"] = {{"tol_rank", cfg.tol_rank},
                   {"tol_eq", cfg.tol_eq},
                   {"tol_center", cfg.tol_center},
                   {"max_word_len", cfg.effective_max_word_len(s.d)},
                   {"max_group_size", cfg.max_group_size},
                   {"n_power_max", cfg.effective_n_power_max(s.d)}};
  return out;
}

int exit_code_for(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Universal: return 0;
    case VerdictKind::FiniteGroup: return 10;
    case VerdictKind::InfiniteNonUniversal: return 11;
    case VerdictKind::Inconclusive: return 12;
  }
  return 12;
}

}  // namespace qudecide

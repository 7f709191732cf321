#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qudecide/adjoint.hpp"
#include "qudecide/ballspec.hpp"
#include "qudecide/decider.hpp"
#include "qudecide/io.hpp"
#include "qudecide/oracle.hpp"

using nlohmann::json;

namespace {

constexpr int kExitInputError = 64;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qudecide::ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json matrix_json(const qudecide::RealMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decides whether a set of SU(d) gates generates a dense "
               "subgroup, a proper infinite subgroup, or a finite group"};
  app.require_subcommand(1);

  std::string file;
  qudecide::DeciderConfig cfg;
  bool as_json = false;
  bool project = false;
  std::uint64_t seed = 0;
  int closure_cap = 10000;
  int net_cap = 3;
  int net_samples = 100;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "gate-set JSON document")->required();
    sub->add_option("--tol-rank", cfg.tol_rank, "kernel rank tolerance");
    sub->add_option("--tol-eq", cfg.tol_eq, "element equality tolerance");
    sub->add_option("--max-word-len", cfg.max_word_len,
                    "word length cap (default 13 for d=2, 20 otherwise)");
    sub->add_option("--max-group", cfg.max_group_size, "element count cap");
    sub->add_option("--n-power-max", cfg.n_power_max,
                    "power cap for the ball search (default 6 for d=2, 64 "
                    "otherwise)");
    sub->add_flag("--json", as_json, "machine-readable output only");
    sub->add_flag("--project", project,
                  "repair near-unitary matrix inputs by projection");
    sub->add_option("--seed", seed, "random seed (netcov)");
  };

  CLI::App* check = app.add_subcommand("check", "run the decision algorithm");
  CLI::App* adj = app.add_subcommand("adjoint", "print adjoint matrices");
  CLI::App* spec = app.add_subcommand("spectrum", "per-gate spectrum report");
  CLI::App* closure = app.add_subcommand("closure", "brute-force closure");
  CLI::App* netcov = app.add_subcommand("netcov", "epsilon-net coverage");
  for (CLI::App* sub : {check, adj, spec, closure, netcov}) add_common(sub);
  closure->add_option("--cap", closure_cap, "closure element cap");
  netcov->add_option("--cap", net_cap, "word length cap");
  netcov->add_option("--samples", net_samples, "Haar samples");

  CLI11_PARSE(app, argc, argv);

  try {
    const qudecide::GateSet gates =
        qudecide::parse_gateset(read_file(file), project);

    if (check->parsed()) {
      const qudecide::Verdict v = qudecide::decide(gates, cfg);
      const json doc = qudecide::verdict_to_json(v, gates, cfg);
      std::cout << doc.dump(2) << "\n";
      if (!as_json) {
        std::cerr << "verdict: " << qudecide::to_string(v.kind) << "\n";
        if (v.kind != qudecide::VerdictKind::Universal) {
          std::cerr << qudecide::suggest_fix(gates, v) << "\n";
        }
      }
      return qudecide::exit_code_for(v);
    }

    if (adj->parsed()) {
      json doc;
      doc["d"] = gates.d;
      doc["adjoint"] = json::object();
      for (const auto& g : gates.gates) {
        doc["adjoint"][g.name] = matrix_json(qudecide::adjoint_of(g));
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (spec->parsed()) {
      const int n_bound = cfg.effective_n_power_max(gates.d);
      json doc;
      doc["d"] = gates.d;
      doc["gates"] = json::array();
      for (const auto& g : gates.gates) {
        const qudecide::SpectrumClass sc =
            qudecide::is_exceptional_spectrum(g, n_bound);
        const qudecide::BallMembership bm = qudecide::ball_membership(g);
        json entry;
        entry["name"] = g.name;
        entry["eigenphases"] = sc.phases;
        entry["exceptional"] = sc.exceptional;
        entry["in_ball"] = bm.in_ball;
        if (sc.n_power) entry["n_power"] = *sc.n_power;
        doc["gates"].push_back(std::move(entry));
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }

    if (closure->parsed()) {
      const qudecide::ClosureResult r =
          qudecide::closure_enumerate(gates, closure_cap, cfg.tol_eq);
      json doc;
      doc["order"] = r.order;
      doc["generations"] = r.generations;
      doc["overflowed"] = r.overflowed;
      std::cout << doc.dump(2) << "\n";
      return r.overflowed ? 12 : 0;
    }

    if (netcov->parsed()) {
      const qudecide::Verdict v = qudecide::decide(gates, cfg);
      if (v.kind != qudecide::VerdictKind::Universal) {
        std::cerr << "warning: set was not decided universal; coverage "
                     "numbers are not meaningful\n";
      }
      const qudecide::CoverageReport r =
          qudecide::epsilon_net_coverage(gates, net_cap, net_samples, seed);
      json doc;
      doc["word_length_cap"] = r.word_length_cap;
      doc["samples"] = r.samples;
      doc["seed"] = r.seed;
      doc["max_min_distance"] = r.max_min_distance;
      doc["epsilon_target"] = r.epsilon_target;
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
  } catch (const qudecide::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const qudecide::ValidationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path() {
  const char* bin = std::getenv("QUDECIDE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QUDECIDE_BIN must point at the CLI binary");
  return bin;
}

RunResult run(const std::string& args) {
  const std::string cmd = binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    r.out.append(buf, n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

const char* kUniversalSet = R"({
  "d": 2,
  "gates": [
    {"name": "H", "builtin": "H"},
    {"name": "T", "builtin": "phase", "phi": 0.6}
  ]
})";

const char* kFiniteSet = R"({
  "d": 2,
  "gates": [
    {"name": "H", "builtin": "H"},
    {"name": "T", "builtin": "phase", "phi": 0.7853981633974483}
  ]
})";

const char* kCommutingSet = R"({
  "d": 2,
  "gates": [
    {"name": "A", "builtin": "phase", "phi": 0.4},
    {"name": "B", "builtin": "phase", "phi": 1.1}
  ]
})";

}  // namespace

TEST_CASE("check: universal set exits 0 with a verdict document") {
  const std::string file = write_temp("qd_universal.json", kUniversalSet);
  const RunResult r = run("check " + file + " --json");
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "universal");
  CHECK(doc.at("kernel_dim") == 1);
  CHECK(doc.at("terminating_l") == 1);
  CHECK(doc.at("witness_word").is_array());
  CHECK(doc.at("config").at("max_word_len") == 13);
  CHECK(doc.at("config").at("n_power_max") == 6);
}

TEST_CASE("check: finite group exits 10") {
  const std::string file = write_temp("qd_finite.json", kFiniteSet);
  const RunResult r = run("check " + file + " --json");
  CHECK(r.exit_code == 10);
  const json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "finite_group");
  CHECK(doc.at("order") == 48);
  CHECK(doc.at("terminating_l") == 8);
}

TEST_CASE("check: commutant failure exits 11") {
  const std::string file = write_temp("qd_commuting.json", kCommutingSet);
  const RunResult r = run("check " + file + " --json");
  CHECK(r.exit_code == 11);
  const json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "not_universal_commutant");
  CHECK(doc.at("kernel_dim").get<int>() > 1);
  CHECK(doc.contains("suggestion"));
}

TEST_CASE("check: word cap produces exit 12") {
  const std::string file = write_temp("qd_finite2.json", kFiniteSet);
  const RunResult r = run("check " + file + " --json --max-word-len 2");
  CHECK(r.exit_code == 12);
  const json doc = json::parse(r.out);
  CHECK(doc.at("verdict") == "inconclusive");
  CHECK(doc.contains("reason"));
}

TEST_CASE("input errors exit 64") {
  CHECK(run("check /nonexistent/path.json").exit_code == 64);
  const std::string garbage = write_temp("qd_garbage.json", "not json at all");
  CHECK(run("check " + garbage).exit_code == 64);
  const std::string bad = write_temp("qd_bad.json", R"({
    "d": 2,
    "gates": [{"name": "A", "matrix": [[[2, 0], [0, 0]], [[0, 0], [2, 0]]]}]
  })");
  CHECK(run("check " + bad).exit_code == 64);
  // --project repairs mildly non-unitary input instead.
  const std::string near = write_temp("qd_near.json", R"({
    "d": 2,
    "gates": [
      {"name": "H", "builtin": "H"},
      {"name": "A", "matrix": [[[0, 1.0000004], [0, 0]],
                               [[0, 0], [0, -1.0000004]]]}
    ]
  })");
  CHECK(run("check " + near).exit_code == 64);
  const RunResult repaired = run("check " + near + " --project --json");
  CHECK(repaired.exit_code != 64);
}

TEST_CASE("adjoint subcommand prints orthogonal matrices") {
  const std::string file = write_temp("qd_adj.json", kUniversalSet);
  const RunResult r = run("adjoint " + file);
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("d") == 2);
  const json& ad = doc.at("adjoint").at("H");
  REQUIRE(ad.size() == 3);
  double frob = 0.0;
  for (const auto& row : ad) {
    for (const auto& x : row) {
      const double v = x.get<double>();
      frob += v * v;
    }
  }
  CHECK(frob == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("spectrum subcommand reports exceptionality") {
  const std::string file = write_temp("qd_spec.json", kFiniteSet);
  const RunResult r = run("spectrum " + file);
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  REQUIRE(doc.at("gates").size() == 2);
  for (const auto& g : doc.at("gates")) {
    CHECK(g.at("exceptional") == true);
    CHECK_FALSE(g.at("in_ball").get<bool>());
  }
}

TEST_CASE("closure subcommand matches known orders") {
  const std::string file = write_temp("qd_closure.json", kFiniteSet);
  const RunResult r = run("closure " + file);
  CHECK(r.exit_code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("order") == 48);
  CHECK(doc.at("overflowed") == false);

  const std::string uni = write_temp("qd_closure2.json", kUniversalSet);
  const RunResult r2 = run("closure " + uni + " --cap 100");
  CHECK(r2.exit_code == 12);
  CHECK(json::parse(r2.out).at("overflowed") == true);
}

TEST_CASE("netcov subcommand is seed-deterministic") {
  const std::string file = write_temp("qd_net.json", kUniversalSet);
  const RunResult a = run("netcov " + file + " --cap 5 --samples 10 --seed 9");
  const RunResult b = run("netcov " + file + " --cap 5 --samples 10 --seed 9");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const json doc = json::parse(a.out);
  CHECK(doc.at("samples") == 10);
  CHECK(doc.at("max_min_distance").get<double>() > 0.0);
}

TEST_CASE("check output is byte-identical across QUDECIDE_THREADS") {
  const std::string file = write_temp("qd_thr.json", kFiniteSet);
  const std::string base = "QUDECIDE_THREADS=1 " + binary_path() + " check " +
                           file + " --json 2>/dev/null";
  const std::string four = "QUDECIDE_THREADS=4 " + binary_path() + " check " +
                           file + " --json 2>/dev/null";
  auto capture = [](const std::string& cmd) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
      out.append(buf, n);
    }
    pclose(pipe);
    return out;
  };
  const std::string a = capture(base);
  const std::string b = capture(four);
  CHECK_FALSE(a.empty());
  CHECK(a == b);
}

// Copyright 2026 The photonic-bsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "bsa/matrix_io.hpp"
#include "bsa/transfer.hpp"
#include "bsa/unitary.hpp"
#include "doctest.h"
#include "expcli.hpp"
#include "test_support.hpp"

using namespace bsa;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bsa");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("bsa_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("evaluate on the identity prints one bit") {
  TempDir dir;
  const auto path = dir.file("id.json");
  write_matrix_file(path, CircuitMatrix::Identity(4, 4));
  const auto r = invoke({"evaluate", "--matrix", path, "--na", "0"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("h_mutual 1.000000") != std::string::npos);
}

TEST_CASE("evaluate infers the ancilla count and rejects mismatches") {
  TempDir dir;
  const auto path = dir.file("id6.json");
  write_matrix_file(path, CircuitMatrix::Identity(6, 6));
  CHECK(invoke({"evaluate", "--matrix", path}).code == cli::kOk);
  const auto bad = invoke({"evaluate", "--matrix", path, "--na", "0"});
  CHECK(bad.code == cli::kUsage);
  CHECK(bad.err.find("6x6") != std::string::npos);
}

TEST_CASE("matrices with singular value above one are refused") {
  TempDir dir;
  const auto path = dir.file("big.json");
  CircuitMatrix u = CircuitMatrix::Identity(4, 4);
  u(0, 0) = 1.5;
  write_matrix_file(path, u);
  const auto r = invoke({"evaluate", "--matrix", path, "--na", "0"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("singular") != std::string::npos);
}

TEST_CASE("malformed input gives a parse error with a location") {
  TempDir dir;
  const auto path = dir.file("broken.json");
  std::ofstream(path) << "{\"m\": 4,\n \"entries\": [[1, 0],\n";
  const auto r = invoke({"evaluate", "--matrix", path});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(invoke({"evaluate", "--matrix", dir.file("missing.json")}).code == cli::kIoError);
}

TEST_CASE("invalid flags are usage errors") {
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"optimize"}).code == cli::kUsage);
  CHECK(invoke({"optimize", "--na", "-2"}).code == cli::kUsage);
  CHECK(invoke({"optimize", "--na", "0", "--gradient", "sideways"}).code == cli::kUsage);
  CHECK(invoke({"optimize", "--na", "0", "--restarts", "0"}).code == cli::kUsage);
  CHECK(invoke({"sweep", "--na-list", ""}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
  CHECK(invoke({"sweep", "--na-list", "0,x"}).code == cli::kUsage);
  CHECK(invoke({"--help"}).code == cli::kOk);
}

TEST_CASE("odd ancilla counts have no conditioned pattern") {
  const auto r = invoke({"conditions", "--na", "3", "--trials", "2"});
  CHECK(r.code == cli::kUnsupported);
  CHECK(r.err.find("unsupported configuration") != std::string::npos);
}

TEST_CASE("check reports conditioned matrices as passing and Haar matrices as failing") {
  TempDir dir;
  const auto cond = dir.file("cond.json");
  const auto haar = dir.file("haar.json");
  CHECK(invoke({"sample", "--kind", "conditioned", "--na", "4", "--seed", "5", "--out", cond}).code ==
        cli::kOk);
  CHECK(invoke({"sample", "--kind", "haar", "--na", "4", "--seed", "5", "--out", haar}).code ==
        cli::kOk);
  const auto pass = invoke({"check", "--matrix", cond});
  CHECK(pass.code == cli::kOk);
  CHECK(pass.out.find("PASS") != std::string::npos);
  const auto fail = invoke({"check", "--matrix", haar});
  CHECK(fail.code == cli::kCheckFailed);
  CHECK(fail.out.find("FAILS") != std::string::npos);
}

TEST_CASE("sample writes a matrix that reads back exactly") {
  TempDir dir;
  const auto path = dir.file("h.json");
  REQUIRE(invoke({"sample", "--m", "5", "--seed", "9", "--out", path}).code == cli::kOk);
  const CircuitMatrix u = read_matrix_file(path);
  CHECK(u == haar_random_unitary(5, 9));
}

TEST_CASE("optimize writes a result that evaluate and rerun reproduce") {
  TempDir dir;
  const auto path = dir.file("opt.json");
  const auto r = invoke({"optimize", "--na", "0", "--restarts", "2", "--seed", "4", "--quiet",
                         "--out", path});
  REQUIRE(r.code == cli::kOk);
  const double best = std::stod(r.out);

  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["manifest"]["command"] == "optimize");
  CHECK(doc["manifest"]["seed"] == 4);
  CHECK(doc["manifest"]["timestamp"].contains("wall_time_s"));
  CHECK(doc["result"]["per_restart"].size() == 2);
  CHECK(doc["result"]["report"]["h_mutual"].get<double>() == doctest::Approx(best).epsilon(1e-6));

  const auto ev = invoke({"evaluate", "--matrix", path});
  CHECK(ev.code == cli::kOk);
  std::ostringstream expect;
  expect << "h_mutual " << r.out;
  CHECK(ev.out.find(expect.str()) != std::string::npos);

  const std::string first = cli::strip_timestamp(doc).dump();
  REQUIRE(invoke({"rerun", path}).code == cli::kOk);
  const std::string second = cli::strip_timestamp(nlohmann::json::parse(slurp(path))).dump();
  CHECK(first == second);
}

TEST_CASE("progress lines are JSON objects on stderr") {
  const auto r = invoke({"optimize", "--na", "0", "--restarts", "2", "--seed", "4"});
  REQUIRE(r.code == cli::kOk);
  std::istringstream lines(r.err);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["event"] == "restart");
    ++count;
  }
  CHECK(count == 2);
}

TEST_CASE("sweep writes a CSV with an embedded manifest") {
  TempDir dir;
  const auto path = dir.file("sweep.csv");
  const auto r = invoke({"sweep", "--na-list", "0", "--restarts", "2", "--quiet", "--out", path});
  REQUIRE(r.code == cli::kOk);
  const auto manifest = cli::read_manifest(path);
  CHECK(manifest["command"] == "sweep");
  const std::string text = slurp(path);
  CHECK(text.find("\nn_a,best_h_mutual,restarts,converged_restarts\n0,") != std::string::npos);
}

TEST_CASE("conditions writes summary and per-trial files") {
  TempDir dir;
  const auto path = dir.file("cond.json");
  const auto r = invoke({"conditions", "--na", "4", "--trials", "3", "--seed", "2", "--out", path});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(slurp(path));
  CHECK(doc["summary"]["trials"] == 3);
  CHECK(doc["summary"]["max_conditioned_bunched_mass"].get<double>() < 1e-15);
  const std::string csv = slurp(dir.file("cond.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 3);
}

TEST_CASE("identity passes the check yet carries one bit") {
  TempDir dir;
  const auto path = dir.file("id8.json");
  write_matrix_file(path, CircuitMatrix::Identity(8, 8));
  const auto check = invoke({"check", "--matrix", path, "--na", "4"});
  CHECK(check.code == cli::kOk);
  // ancilla columns satisfy every condition, qubit columns I and II or III
  CHECK(check.out.find("column 1: I,II,III,IV") != std::string::npos);
  CHECK(check.out.find("column 5: I,III") != std::string::npos);
  CHECK(check.out.find("column 7: I,II") != std::string::npos);
  CHECK(check.out.find("ambiguous 0") != std::string::npos);
  const auto eval = invoke({"evaluate", "--matrix", path});
  CHECK(eval.out.find("h_mutual 1.000000") != std::string::npos);
}

TEST_CASE("stored results re-evaluate exactly and tables stay normalized") {
  TempDir dir;
  const auto result = dir.file("opt.json");
  const auto table = dir.file("table.json");
  REQUIRE(invoke({"optimize", "--na", "2", "--restarts", "2", "--seed", "3", "--quiet", "--out",
                  result}).code == cli::kOk);
  REQUIRE(invoke({"evaluate", "--matrix", result, "--table", table}).code == cli::kOk);
  const auto stored = nlohmann::json::parse(slurp(result));
  const auto doc = nlohmann::json::parse(slurp(table));
  CHECK(std::abs(doc["report"]["h_mutual"].get<double>() -
                 stored["result"]["report"]["h_mutual"].get<double>()) < 1e-9);

  const auto& t = doc["table"];
  CHECK(t["outcomes"].size() == 126);
  for (std::size_t x = 0; x < 4; ++x) {
    double total = t["garbage"][x].get<double>();
    for (const auto& row : t["p"]) total += row[x].get<double>();
    CHECK(std::abs(total - 1.0) < 1e-9);
  }

  // the matrix in the result file is the one the table was computed from
  const CircuitMatrix u = matrix_from_json(stored["result"]["best_matrix"].dump());
  const OutcomeTable direct = outcome_table(u, 2);
  for (std::size_t y = 0; y < direct.rows.size(); ++y) {
    for (std::size_t x = 0; x < 4; ++x) CHECK(t["p"][y][x].get<double>() == direct.rows[y][x]);
  }
}

TEST_CASE("conditioned populations at six ancillas") {
  TempDir dir;
  const auto path = dir.file("c6.json");
  REQUIRE(invoke({"conditions", "--na", "6", "--trials", "100", "--seed", "1", "--out", path})
              .code == cli::kOk);
  const auto s = nlohmann::json::parse(slurp(path))["summary"];
  CHECK(s["max_conditioned_bunched_mass"].get<double>() == 0.0);
  CHECK(s["conditioned"]["max"].get<double>() <= 2.0);
  CHECK(s["unconditioned"]["max"].get<double>() <= 2.0);
  CHECK(s["unconditioned_trials_with_bunching"] == 100);
}

// Copyright 2026 The entropy_duel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "entropy_duel/cli.hpp"
#include "entropy_duel/matrix_json.hpp"
#include "entropy_duel/random.hpp"

namespace entropy_duel::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "entropy_duel");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const char* env = std::getenv("ENTROPY_DUEL_TEST_TMP");
  fs::path dir = env ? fs::path(env) : fs::temp_directory_path();
  dir /= "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~EnvGuard() { unsetenv(name_); }

 private:
  const char* name_;
};

TEST(Cli, MonotonicitySuiteAllPass) {
  const Outcome o = invoke({"proptest", "monotonicity", "--seed", "1", "--n", "100", "--dim", "3"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const json report = json::parse(o.out);
  EXPECT_EQ(report.at("schema"), kSchemaVersion);
  ASSERT_EQ(report.at("rows").size(), 100u);
  for (const json& row : report.at("rows")) {
    EXPECT_TRUE(row.at("pass").get<bool>());
    EXPECT_TRUE(row.contains("lhs"));
    EXPECT_TRUE(row.contains("rhs"));
    EXPECT_TRUE(row.contains("slack"));
    EXPECT_LE(row.at("value").get<double>(), row.at("bound").get<double>());
  }
  EXPECT_EQ(report.at("rows")[7].at("instance_id"), "monotonicity-1-0007");
}

TEST(Cli, EverySuitePassesForEveryKind) {
  const std::string viol = scratch("suite_violation.json").string();
  for (const std::string& suite : suite_names()) {
    for (const char* kind : {"umegaki", "bs", "variational"}) {
      const Outcome o = invoke({"proptest", suite, "--seed", "3", "--n", "5", "--kind", kind,
                                "--violation-out", viol});
      if (suite == "additivity" && std::string(kind) == "variational") {
        // Product additivity is only claimed for umegaki; the variational
        // kind is superadditive on products, so its rows are a report.
        EXPECT_TRUE(o.code == kExitOk || o.code == kExitViolation) << o.err;
        continue;
      }
      EXPECT_EQ(o.code, kExitOk) << suite << " " << kind << ": " << o.err;
    }
  }
}

TEST(Cli, CsvHasFixedColumns) {
  const Outcome o = invoke({"proptest", "gibbs", "--n", "4", "--format", "csv"});
  ASSERT_EQ(o.code, kExitOk);
  std::istringstream lines(o.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "experiment,instance_id,quantity,value,bound,pass");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5);
    EXPECT_NE(line.find(",true"), std::string::npos);
  }
  EXPECT_EQ(rows, 4);
}

TEST(Cli, RowsRecomputeFromSerializedInstances) {
  ExperimentConfig config;
  config.dim = 2;
  for (const std::string& suite : suite_names()) {
    for (int i = 0; i < 3; ++i) {
      const json inst = generate_instance(suite, 9, i, config);
      const json reparsed = json::parse(inst.dump());
      const Check a = evaluate_instance(suite, inst);
      const Check b = evaluate_instance(suite, reparsed);
      EXPECT_NEAR(a.lhs.to_double(), b.lhs.to_double(), 1e-12) << suite;
      EXPECT_NEAR(a.rhs.to_double(), b.rhs.to_double(), 1e-12) << suite;
    }
  }
}

TEST(Cli, MalformedMatrixIsValidationError) {
  const fs::path p = scratch("bad_matrix.json");
  write_file(p, R"({"rho": {"dim": 2, "entries": [[1,0],[0,0],[0,0]]},
                    "sigma": {"dim": 2, "entries": [[0.5,0],[0,0],[0,0],[0.5,0]]}})");
  const Outcome o = invoke({"entropy", p.string()});
  EXPECT_EQ(o.code, kExitValidation);
  EXPECT_NE(o.err.find("rho.entries"), std::string::npos) << o.err;

  const fs::path q = scratch("bad_syntax.json");
  write_file(q, "{\n  \"rho\": [1, 2,\n");
  const Outcome s = invoke({"entropy", q.string()});
  EXPECT_EQ(s.code, kExitValidation);
  EXPECT_NE(s.err.find("line"), std::string::npos) << s.err;

  EXPECT_EQ(invoke({"entropy", scratch("missing.json").string()}).code, kExitValidation);
  EXPECT_EQ(invoke({"entropy", "--bogus"}).code, kExitValidation);
  EXPECT_EQ(invoke({"proptest", "gibbs", "--tol", "-1"}).code, kExitValidation);
}

TEST(Cli, CapacityIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"capacity", "--channel", "depolarizing:0.5", "--kind",
                                      "umegaki"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const json r = json::parse(a.out);
  const double p = 0.5, x = 1 - 3 * p / 4, y = p / 4;
  EXPECT_NEAR(r.at("value").get<double>(), 2 * std::log(2.0) + x * std::log(x) + 3 * y * std::log(y),
              1e-6);
  for (const char* key : {"value", "gap", "argmax_input", "iterations"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
}

TEST(Cli, IterationBudgetOverrideGivesConvergenceExit) {
  EnvGuard guard("ENTROPY_DUEL_MAX_ITERS", "1");
  const Outcome o = invoke({"channel", "capacity", "--channel", "amplitude-damping:0.3"});
  EXPECT_EQ(o.code, kExitConvergence) << o.err;
  EXPECT_FALSE(o.out.empty());
}

TEST(Cli, ReplayOfSyntheticViolation) {
  // A scaling instance whose optimizer budget is far too small to close the
  // gap between the two sides.
  Rng rng(5);
  json inst;
  inst["divergence"] = {{"kind", "variational"}, {"max_iters", 1}, {"grad_tol", 1e-8},
                        {"qbound", 40.0}};
  inst["mu"] = 2.0;
  inst["rho"] = density_to_json(random_density(3, rng).scaled(2.0));
  inst["M"] = density_to_json(random_density(3, rng));
  const json file = {{"schema", 1},
                     {"experiment", "proptest.scaling"},
                     {"instance_id", "scaling-hand-0000"},
                     {"instance", inst}};
  const fs::path p = scratch("synthetic_violation.json");
  write_file(p, file.dump(2));
  const Outcome a = invoke({"replay", p.string()});
  EXPECT_EQ(a.code, kExitViolation) << a.err;
  const json r = json::parse(a.out);
  EXPECT_TRUE(r.contains("lhs"));
  EXPECT_TRUE(r.contains("rhs"));
  EXPECT_TRUE(r.contains("gap"));
  EXPECT_FALSE(r.at("pass").get<bool>());
  EXPECT_EQ(invoke({"replay", p.string()}).out, a.out);

  json wrong = file;
  wrong["schema"] = 2;
  const fs::path w = scratch("wrong_schema.json");
  write_file(w, wrong.dump());
  EXPECT_EQ(invoke({"replay", w.string()}).code, kExitValidation);
}

TEST(Cli, ReplayOfPassingInstance) {
  ExperimentConfig config;
  config.dim = 3;
  const json file = {{"schema", 1},
                     {"experiment", "proptest.convexity"},
                     {"instance_id", "convexity-1-0000"},
                     {"instance", generate_instance("convexity", 1, 0, config)}};
  const fs::path p = scratch("passing.json");
  write_file(p, file.dump());
  const Outcome a = invoke({"replay", p.string()});
  EXPECT_EQ(a.code, kExitOk) << a.err;
  EXPECT_TRUE(json::parse(a.out).at("pass").get<bool>());
  EXPECT_EQ(invoke({"replay", p.string()}).out, a.out);
}

TEST(Cli, ViolationFileIsWrittenAndReplays) {
  // A budget of one iteration breaks the scaling identity on most instances.
  EnvGuard guard("ENTROPY_DUEL_MAX_ITERS", "1");
  const fs::path report = scratch("scaling_report.json");
  const fs::path viol = scratch("scaling_violation.json");
  fs::remove(viol);
  const Outcome o = invoke({"proptest", "scaling", "--n", "5", "--dim", "3", "--out",
                            report.string(), "--violation-out", viol.string()});
  ASSERT_EQ(o.code, kExitViolation) << o.err;
  ASSERT_TRUE(fs::exists(viol));
  const json report_json = json::parse(read_file(report));
  EXPECT_GT(report_json.at("summary").at("violations").get<int>(), 0);
  EXPECT_EQ(invoke({"replay", viol.string()}).code, kExitViolation);
}

TEST(Cli, OtherCommands) {
  const Outcome g = invoke({"game", "solve", R"({"payoffs": [[3, 1], [0, 2]]})"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_NEAR(json::parse(g.out).at("value").get<double>(), 1.5, 1e-8);

  const Outcome e = invoke({"game", "estimate", R"({"Q": [0.3, 1.0]})"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_NEAR(json::parse(e.out).at("value").get<double>(), 0.3, 1e-12);

  const Outcome b = invoke({"game", "biconj", R"({"P": [0.75, 0.25], "M": [0.5, 0.5]})"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_NEAR(json::parse(b.out).at("value").get<double>(),
              0.75 * std::log(1.5) + 0.25 * std::log(0.5), 1e-5);

  const Outcome c = invoke({"conjugate", R"({"grid": {"lo": [-5], "hi": [5], "step": [0.001]},
                                            "function": "exp", "xstar": [1.0]})"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  EXPECT_NEAR(json::parse(c.out).at("value").get<double>(), -1.0, 1e-3);

  const Outcome m = invoke({"channel", "mi", "--channel", "identity"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  EXPECT_NEAR(json::parse(m.out).at("value").get<double>(), 2 * std::log(2.0), 1e-9);

  const Outcome i = invoke({"channel", "info", "--channel", "dephasing:1"});
  EXPECT_EQ(i.code, kExitOk) << i.err;

  const Outcome r = invoke({"entropy", "--kind", "bs", "--seed", "4", "--dim", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_GE(json::parse(r.out).at("value").get<double>(), 0.0);

  const Outcome v = invoke({"entropy", "--kind", "variational", "--format", "csv"});
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(v.out.rfind("key,value\n", 0), 0u);
}

TEST(Cli, OutputFileMatchesStdout) {
  const fs::path p = scratch("gibbs.json");
  const Outcome a = invoke({"proptest", "gibbs", "--n", "3", "--out", p.string()});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_TRUE(a.out.empty());
  EXPECT_EQ(read_file(p), invoke({"proptest", "gibbs", "--n", "3"}).out);
}

}  // namespace
}  // namespace entropy_duel::cli

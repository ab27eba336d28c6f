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

#pragma once

// Configuration-driven entry point. Exit codes are the only success channel:
//   0 every check passed, 2 validation error, 3 convergence failure,
//   4 property violation (the first violating instance is written for replay).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "entropy_duel/ext_real.hpp"

namespace entropy_duel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitConvergence = 3;
inline constexpr int kExitViolation = 4;
inline constexpr int kSchemaVersion = 1;

enum class Format { kJson, kCsv };

struct ExperimentConfig {
  // "conjugate", "game.solve", "game.estimate", "game.biconj", "entropy",
  // "channel.info", "channel.mi", "channel.capacity", "channel.additivity",
  // "proptest.<suite>", "replay".
  std::string command;
  std::vector<std::string> inputs;  // file paths or inline JSON objects
  std::uint64_t seed = 1;
  std::map<std::string, double> tolerances;  // overrides, e.g. "tol", "slack"
  std::string output;                        // empty writes to the stdout stream
  Format format = Format::kJson;

  int n = 20;
  std::size_t dim = 2;
  std::string kind = "umegaki";
  std::optional<double> mu;
  double qbound = 40.0;
  int max_iters = 500;
  int restarts = 5;
  int resolution = 20;
  std::vector<std::string> channels;
  std::string gamma_file;
  std::string violation_out;  // default: <output>.violation.json or ./violation.json

  // Throws ValidationError on missing files or non-positive tolerances.
  void validate() const;
  double tolerance(const std::string& name, double fallback) const;
};

struct ReportRow {
  std::string experiment;
  std::string instance_id;
  std::string quantity;
  ExtReal value;
  std::optional<double> bound;
  std::optional<bool> pass;
  // Both sides of an inequality or equality check and its slack.
  std::optional<ExtReal> lhs;
  std::optional<ExtReal> rhs;
  std::optional<double> slack;
  bool converged = true;
};

nlohmann::json ext_to_json(const ExtReal& v);
ExtReal ext_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json row_to_json(const ReportRow& row);
std::string csv_header();
std::string row_to_csv(const ReportRow& row);

// One inequality (lhs <= rhs + slack) or equality (|lhs - rhs| <= slack).
enum class Relation { kLessEqual, kEqual };
struct Check {
  ExtReal lhs;
  ExtReal rhs;
  double slack = 0.0;
  Relation relation = Relation::kLessEqual;
  bool converged = true;

  // lhs - rhs (or |lhs - rhs|); 0 when rhs is +infinity in an inequality.
  ExtReal violation() const;
  bool pass() const;
};

ReportRow make_row(const std::string& experiment, const std::string& instance_id,
                   const std::string& quantity, const Check& check);

// Property suites. Each instance is generated as JSON and evaluated from that
// JSON, so replaying a serialized instance reproduces its row exactly.
std::vector<std::string> suite_names();
nlohmann::json generate_instance(const std::string& suite, std::uint64_t seed, int index,
                                 const ExperimentConfig& config);
Check evaluate_instance(const std::string& suite, const nlohmann::json& instance);
std::string suite_quantity(const std::string& suite);
std::uint64_t instance_seed(std::uint64_t seed, int index);

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);
// Parses argv with CLI11 and calls run.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace entropy_duel::cli

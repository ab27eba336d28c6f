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

#include <cmath>
#include <filesystem>
#include <sstream>

#include "entropy_duel/cli.hpp"
#include "entropy_duel/errors.hpp"

namespace entropy_duel::cli {
namespace {

// Shortest round-trip text, matching the JSON writer.
std::string format_double(double v) { return nlohmann::json(v).dump(); }

std::string format_ext(const ExtReal& v) {
  return v.is_infinite() ? "+inf" : format_double(v.value());
}

}  // namespace

void ExperimentConfig::validate() const {
  for (const auto& in : inputs) {
    if (!in.empty() && in.front() == '{') continue;
    if (!std::filesystem::exists(in)) throw ValidationError("input file not found: " + in);
  }
  if (!gamma_file.empty() && !std::filesystem::exists(gamma_file)) {
    throw ValidationError("gamma file not found: " + gamma_file);
  }
  for (const auto& [name, v] : tolerances) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ValidationError("tolerance '" + name + "' must be positive");
    }
  }
  if (n < 1) throw ValidationError("--n must be >= 1");
  if (dim < 1) throw ValidationError("--dim must be >= 1");
  if (max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (restarts < 0) throw ValidationError("--restarts must be >= 0");
  if (!(qbound > 0.0)) throw ValidationError("--qbound must be positive");
  if (mu && !(*mu > 0.0)) throw ValidationError("--mu must be positive");
}

double ExperimentConfig::tolerance(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

nlohmann::json ext_to_json(const ExtReal& v) {
  if (v.is_infinite()) return "+inf";
  return v.value();
}

ExtReal ext_from_json(const nlohmann::json& j, const std::string& field) {
  if (j.is_string() && j.get<std::string>() == "+inf") return ExtReal::plus_infinity();
  if (!j.is_number()) throw ValidationError(field + ": expected a number or \"+inf\"");
  return ExtReal(j.get<double>());
}

ExtReal Check::violation() const {
  if (relation == Relation::kEqual) {
    if (lhs.is_infinite() || rhs.is_infinite()) {
      return lhs.is_infinite() && rhs.is_infinite() ? ExtReal(0.0) : ExtReal::plus_infinity();
    }
    return ExtReal(std::abs(lhs.value() - rhs.value()));
  }
  if (rhs.is_infinite()) return ExtReal(0.0);
  if (lhs.is_infinite()) return ExtReal::plus_infinity();
  const double d = lhs.value() - rhs.value();
  return ExtReal(d);
}

bool Check::pass() const { return violation() <= ExtReal(slack); }

ReportRow make_row(const std::string& experiment, const std::string& instance_id,
                   const std::string& quantity, const Check& check) {
  ReportRow row;
  row.experiment = experiment;
  row.instance_id = instance_id;
  row.quantity = quantity;
  row.value = check.violation();
  row.bound = check.slack;
  row.pass = check.pass();
  row.lhs = check.lhs;
  row.rhs = check.rhs;
  row.slack = check.slack;
  row.converged = check.converged;
  return row;
}

nlohmann::json row_to_json(const ReportRow& row) {
  nlohmann::json j;
  j["experiment"] = row.experiment;
  j["instance_id"] = row.instance_id;
  j["quantity"] = row.quantity;
  j["value"] = ext_to_json(row.value);
  j["bound"] = row.bound ? nlohmann::json(*row.bound) : nlohmann::json(nullptr);
  j["pass"] = row.pass ? nlohmann::json(*row.pass) : nlohmann::json(nullptr);
  if (row.lhs) j["lhs"] = ext_to_json(*row.lhs);
  if (row.rhs) j["rhs"] = ext_to_json(*row.rhs);
  if (row.slack) j["slack"] = *row.slack;
  j["converged"] = row.converged;
  return j;
}

std::string csv_header() { return "experiment,instance_id,quantity,value,bound,pass"; }

std::string row_to_csv(const ReportRow& row) {
  std::ostringstream os;
  os << row.experiment << ',' << row.instance_id << ',' << row.quantity << ','
     << format_ext(row.value) << ',' << (row.bound ? format_double(*row.bound) : "") << ','
     << (row.pass ? (*row.pass ? "true" : "false") : "");
  return os.str();
}

}  // namespace entropy_duel::cli

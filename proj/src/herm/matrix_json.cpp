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

#include "entropy_duel/matrix_json.hpp"

#include "entropy_duel/errors.hpp"

namespace entropy_duel {
namespace {

using nlohmann::json;

std::size_t positive_size(const json& j, const char* key, const std::string& field) {
  if (!j.contains(key)) throw ValidationError(field + ": missing field '" + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ValidationError(field + "." + key + ": expected a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (const cplx& z : m.values()) entries.push_back({z.real(), z.imag()});
  json out;
  if (m.is_square()) {
    out["dim"] = m.rows();
  } else {
    out["rows"] = m.rows();
    out["cols"] = m.cols();
  }
  out["entries"] = std::move(entries);
  return out;
}

CMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw ValidationError(field + ": expected an object");
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (j.contains("dim")) {
    rows = cols = positive_size(j, "dim", field);
  } else {
    rows = positive_size(j, "rows", field);
    cols = positive_size(j, "cols", field);
  }
  if (!j.contains("entries") || !j.at("entries").is_array()) {
    throw ValidationError(field + ".entries: expected an array of [re, im] pairs");
  }
  const json& entries = j.at("entries");
  if (entries.size() != rows * cols) {
    throw ValidationError(field + ".entries: expected " + std::to_string(rows * cols) +
                          " entries, got " + std::to_string(entries.size()));
  }
  std::vector<cplx> data;
  data.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& e = entries[k];
    const std::string where = field + ".entries[" + std::to_string(k) + "]";
    if (e.is_number()) {
      data.emplace_back(e.get<double>(), 0.0);
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      data.emplace_back(e[0].get<double>(), e[1].get<double>());
    } else {
      throw ValidationError(where + ": expected [re, im]");
    }
  }
  CMatrix m(rows, cols, std::move(data));
  if (!m.all_finite()) throw ValidationError(field + ": non-finite entry");
  return m;
}

json channel_to_json(const QuantumChannel& ch) {
  json kraus = json::array();
  for (const CMatrix& a : ch.kraus()) kraus.push_back(matrix_to_json(a));
  return {{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", kraus}};
}

QuantumChannel channel_from_json(const json& j, const std::string& field) {
  if (!j.is_object()) throw ValidationError(field + ": expected an object");
  const std::size_t din = positive_size(j, "dim_in", field);
  const std::size_t dout = positive_size(j, "dim_out", field);
  if (!j.contains("kraus") || !j.at("kraus").is_array()) {
    throw ValidationError(field + ".kraus: expected an array of matrices");
  }
  std::vector<CMatrix> kraus;
  for (std::size_t k = 0; k < j.at("kraus").size(); ++k) {
    kraus.push_back(
        matrix_from_json(j.at("kraus")[k], field + ".kraus[" + std::to_string(k) + "]"));
  }
  return QuantumChannel(din, dout, std::move(kraus));
}

json density_to_json(const DensityOperator& rho) {
  json j = matrix_to_json(rho.matrix());
  j["mass"] = rho.mass();
  return j;
}

DensityOperator density_from_json(const json& j, const std::string& field) {
  CMatrix m = matrix_from_json(j, field);
  if (!m.is_square()) throw ValidationError(field + ": density must be square");
  if (j.contains("mass")) {
    if (!j.at("mass").is_number()) throw ValidationError(field + ".mass: expected a number");
    return DensityOperator(std::move(m), j.at("mass").get<double>());
  }
  return DensityOperator(std::move(m));
}

}  // namespace entropy_duel

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

// JSON schemas for operators and channels.
//
//   matrix:  {"dim": n, "entries": [[re, im], ...]}        row-major, n*n pairs
//            {"rows": r, "cols": c, "entries": [...]}      rectangular (Kraus)
//   channel: {"dim_in": n, "dim_out": m, "kraus": [matrix, ...]}
//
// Parse failures throw ValidationError naming the offending field.

#include <string>

#include <json.hpp>

#include "entropy_duel/cmatrix.hpp"
#include "entropy_duel/herm.hpp"
#include "entropy_duel/quantum_channel.hpp"

namespace entropy_duel {

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j, const std::string& field = "matrix");

nlohmann::json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const nlohmann::json& j,
                                 const std::string& field = "channel");

// Matrix schema plus "mass"; density_from_json defaults a missing mass to 1.
nlohmann::json density_to_json(const DensityOperator& rho);
DensityOperator density_from_json(const nlohmann::json& j,
                                  const std::string& field = "state");

}  // namespace entropy_duel

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

#include "entropy_duel/quantum_channel.hpp"

#include <string>

#include "entropy_duel/errors.hpp"

namespace entropy_duel {

QuantumChannel::QuantumChannel(std::size_t dim_in, std::size_t dim_out,
                               std::vector<CMatrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (dim_in_ == 0 || dim_out_ == 0) throw ValidationError("QuantumChannel: zero dimension");
  if (kraus_.empty()) throw ValidationError("QuantumChannel: empty Kraus family");
  for (std::size_t k = 0; k < kraus_.size(); ++k) {
    const CMatrix& a = kraus_[k];
    if (a.rows() != dim_out_ || a.cols() != dim_in_) {
      throw ValidationError("QuantumChannel: Kraus operator " + std::to_string(k) +
                            " is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected " +
                            std::to_string(dim_out_) + "x" + std::to_string(dim_in_));
    }
    if (!a.all_finite()) throw ValidationError("QuantumChannel: non-finite Kraus entry");
  }
  const double err = completeness_error();
  if (err > kCompletenessTolerance) {
    throw ValidationError("QuantumChannel: sum A^dagger A deviates from identity by " +
                          std::to_string(err));
  }
}

double QuantumChannel::completeness_error() const {
  CMatrix sum(dim_in_, dim_in_);
  for (const CMatrix& a : kraus_) sum += a.adjoint() * a;
  return frobenius_distance(sum, CMatrix::identity(dim_in_));
}

}  // namespace entropy_duel

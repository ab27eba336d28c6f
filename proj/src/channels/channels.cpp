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

#include "entropy_duel/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entropy_duel/errors.hpp"

namespace entropy_duel::channels {
namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError(std::string(name) + ": parameter " + std::to_string(p) +
                          " outside [0, 1]");
  }
}

double parse_number(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(v)) {
    throw ValidationError("channel '" + spec + "': cannot parse parameter '" + text + "'");
  }
  return v;
}

}  // namespace

CMatrix apply(const QuantumChannel& ch, const CMatrix& x) {
  if (x.rows() != ch.dim_in() || x.cols() != ch.dim_in()) {
    throw ValidationError("apply: state is " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()) + ", channel input dimension is " +
                          std::to_string(ch.dim_in()));
  }
  CMatrix out(ch.dim_out(), ch.dim_out());
  for (const CMatrix& a : ch.kraus()) out += a * x * a.adjoint();
  return out;
}

DensityOperator apply(const QuantumChannel& ch, const DensityOperator& state) {
  return DensityOperator::unnormalized(apply(ch, state.matrix()));
}

QuantumChannel channel_tensor(const QuantumChannel& a, const QuantumChannel& b) {
  std::vector<CMatrix> kraus;
  kraus.reserve(a.kraus().size() * b.kraus().size());
  for (const CMatrix& x : a.kraus())
    for (const CMatrix& y : b.kraus()) kraus.push_back(kron(x, y));
  return QuantumChannel(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(), std::move(kraus));
}

QuantumChannel channel_compose(const QuantumChannel& after, const QuantumChannel& before) {
  if (before.dim_out() != after.dim_in()) {
    throw ValidationError("channel_compose: output dimension " +
                          std::to_string(before.dim_out()) + " does not feed input dimension " +
                          std::to_string(after.dim_in()));
  }
  std::vector<CMatrix> kraus;
  kraus.reserve(after.kraus().size() * before.kraus().size());
  for (const CMatrix& x : after.kraus())
    for (const CMatrix& y : before.kraus()) kraus.push_back(x * y);
  return QuantumChannel(before.dim_in(), after.dim_out(), std::move(kraus));
}

QuantumChannel pinching(const std::vector<CMatrix>& projections) {
  if (projections.empty()) throw ValidationError("pinching: empty projection family");
  const std::size_t d = projections.front().rows();
  CMatrix total(d, d);
  for (std::size_t k = 0; k < projections.size(); ++k) {
    const CMatrix& p = projections[k];
    const std::string tag = "pinching: projection " + std::to_string(k);
    if (p.rows() != d || p.cols() != d) throw ValidationError(tag + " has the wrong shape");
    if (frobenius_distance(p, p.adjoint()) > 1e-10) {
      throw ValidationError(tag + " is not Hermitian");
    }
    if (frobenius_distance(p * p, p) > 1e-10) throw ValidationError(tag + " is not idempotent");
    for (std::size_t l = k + 1; l < projections.size(); ++l) {
      if ((p * projections[l]).frobenius_norm() > 1e-10) {
        throw ValidationError(tag + " is not orthogonal to projection " + std::to_string(l));
      }
    }
    total += p;
  }
  if (frobenius_distance(total, CMatrix::identity(d)) > 1e-10) {
    throw ValidationError("pinching: projections do not sum to the identity");
  }
  return QuantumChannel(d, d, projections);
}

QuantumChannel unitary_channel(const CMatrix& u) {
  if (!u.is_square()) throw ValidationError("unitary_channel: matrix is not square");
  return QuantumChannel(u.rows(), u.rows(), {u});
}

QuantumChannel identity_channel(std::size_t dim) {
  if (dim == 0) throw ValidationError("identity channel: dimension must be >= 1");
  return QuantumChannel(dim, dim, {CMatrix::identity(dim)});
}

QuantumChannel depolarizing(double p, std::size_t dim) {
  require_probability(p, "depolarizing");
  if (dim < 2) throw ValidationError("depolarizing: dimension must be >= 2");
  const double d2 = static_cast<double>(dim * dim);
  const double pi = 3.14159265358979323846;
  // Weyl operators X^a Z^b; their uniform twirl is the completely depolarizing map.
  std::vector<CMatrix> kraus;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double weight = (a == 0 && b == 0) ? 1.0 - p + p / d2 : p / d2;
      if (weight <= 0.0) continue;
      CMatrix w(dim, dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const double phase = 2.0 * pi * static_cast<double>(b * j) / static_cast<double>(dim);
        w((j + a) % dim, j) = std::sqrt(weight) * cplx(std::cos(phase), std::sin(phase));
      }
      kraus.push_back(std::move(w));
    }
  }
  return QuantumChannel(dim, dim, std::move(kraus));
}

QuantumChannel dephasing(double p, std::size_t dim) {
  require_probability(p, "dephasing");
  if (dim < 2) throw ValidationError("dephasing: dimension must be >= 2");
  std::vector<CMatrix> kraus;
  if (p < 1.0) kraus.push_back(CMatrix::identity(dim) * cplx(std::sqrt(1.0 - p)));
  if (p > 0.0) {
    for (std::size_t k = 0; k < dim; ++k) {
      CMatrix e(dim, dim);
      e(k, k) = std::sqrt(p);
      kraus.push_back(std::move(e));
    }
  }
  return QuantumChannel(dim, dim, std::move(kraus));
}

QuantumChannel amplitude_damping(double g) {
  require_probability(g, "amplitude-damping");
  CMatrix a0(2, 2);
  a0(0, 0) = 1.0;
  a0(1, 1) = std::sqrt(1.0 - g);
  CMatrix a1(2, 2);
  a1(0, 1) = std::sqrt(g);
  return QuantumChannel(2, 2, {a0, a1});
}

QuantumChannel named_channel(const std::string& spec) {
  std::string name = spec;
  std::string arg;
  if (const auto pos = spec.find(':'); pos != std::string::npos) {
    name = spec.substr(0, pos);
    arg = spec.substr(pos + 1);
  } else if (const auto open = spec.find('('); open != std::string::npos) {
    if (spec.back() != ')') throw ValidationError("channel '" + spec + "': missing ')'");
    name = spec.substr(0, open);
    arg = spec.substr(open + 1, spec.size() - open - 2);
  }
  if (name == "identity") {
    if (arg.empty()) return identity_channel(2);
    const double d = parse_number(arg, spec);
    if (d < 1 || d != std::floor(d)) {
      throw ValidationError("channel '" + spec + "': dimension must be a positive integer");
    }
    return identity_channel(static_cast<std::size_t>(d));
  }
  if (arg.empty()) throw ValidationError("channel '" + spec + "': missing parameter");
  const double x = parse_number(arg, spec);
  if (name == "depolarizing") return depolarizing(x);
  if (name == "dephasing") return dephasing(x);
  if (name == "amplitude-damping") return amplitude_damping(x);
  throw ValidationError("unknown channel '" + name +
                        "' (expected identity, depolarizing, dephasing, amplitude-damping)");
}

double CompoundState::marginal_error() const {
  const CMatrix a = partial_trace(joint.matrix(), dim_a, dim_b, Keep::kFirst);
  const CMatrix b = partial_trace(joint.matrix(), dim_a, dim_b, Keep::kSecond);
  return std::max(frobenius_distance(a, marginal_a.matrix()),
                  frobenius_distance(b, marginal_b.matrix()));
}

CompoundState standard_compound(const DensityOperator& sigma0, const QuantumChannel& ch) {
  if (sigma0.dim() != ch.dim_in()) {
    throw ValidationError("standard_compound: input dimension " + std::to_string(sigma0.dim()) +
                          " does not match channel input " + std::to_string(ch.dim_in()));
  }
  const std::size_t da = ch.dim_in();
  const std::size_t db = ch.dim_out();
  const CMatrix root = mat_sqrt(sigma0.hermitian()).matrix();
  std::vector<cplx> psi(da * da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) psi[i * da + j] = root(j, i);
  const CMatrix v = CMatrix::column(psi);
  const CMatrix pure = v * v.adjoint();

  CMatrix joint(da * db, da * db);
  const CMatrix id = CMatrix::identity(da);
  for (const CMatrix& a : ch.kraus()) {
    const CMatrix k = kron(id, a);
    joint += k * pure * k.adjoint();
  }
  CompoundState out{DensityOperator::unnormalized(std::move(joint)),
                    transpose_tilde(sigma0), apply(ch, sigma0), da, db};
  return out;
}

ExtReal mutual_information(const DensityOperator& sigma0, const QuantumChannel& ch,
                           const DivergenceSpec& spec) {
  const CompoundState c = standard_compound(sigma0, ch);
  return entropy::relent(spec, c.joint, tensor(c.marginal_a, c.marginal_b));
}

ExtReal entangled_entropy(const DensityOperator& sigma, const DivergenceSpec& spec) {
  return mutual_information(sigma, identity_channel(sigma.dim()), spec);
}

ExtReal conditional_entropy(const DensityOperator& sigma0, const QuantumChannel& ch,
                            const DivergenceSpec& spec) {
  const ExtReal mi = mutual_information(sigma0, ch, spec);
  if (mi.is_infinite()) {
    throw DomainError("conditional_entropy: mutual information is +infinity");
  }
  return entangled_entropy(apply(ch, sigma0), spec) - mi.value();
}

JAdditivity product_input_J_additivity_check(const std::vector<QuantumChannel>& chs,
                                             const std::vector<DensityOperator>& sigmas,
                                             const DivergenceSpec& spec) {
  if (chs.empty() || chs.size() != sigmas.size()) {
    throw ValidationError("J additivity: channel and input lists must be non-empty and equal");
  }
  QuantumChannel joint_ch = chs.front();
  DensityOperator joint_in = sigmas.front();
  JAdditivity out;
  for (std::size_t i = 0; i < chs.size(); ++i) {
    if (i > 0) {
      joint_ch = channel_tensor(joint_ch, chs[i]);
      joint_in = tensor(joint_in, sigmas[i]);
    }
    out.rhs += mutual_information(sigmas[i], chs[i], spec).to_double();
  }
  out.lhs = mutual_information(joint_in, joint_ch, spec).to_double();
  return out;
}

}  // namespace entropy_duel::channels

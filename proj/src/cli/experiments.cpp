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

// Property suites. Every instance is a self-contained JSON object holding its
// operands and settings; evaluation reads only that object.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entropy_duel/channels.hpp"
#include "entropy_duel/classical_game.hpp"
#include "entropy_duel/cli.hpp"
#include "entropy_duel/conjugate.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/matrix_json.hpp"
#include "entropy_duel/quantum_entropy.hpp"
#include "entropy_duel/random.hpp"

namespace entropy_duel::cli {
namespace {

using nlohmann::json;
using Vec = std::vector<double>;

Vec vec_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) throw ValidationError(field + ": expected an array of numbers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) {
      throw ValidationError(field + "[" + std::to_string(i) + "]: expected a number");
    }
    v.push_back(j[i].get<double>());
  }
  return v;
}

const json& at(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double dot(const Vec& a, const Vec& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Divergence settings shared by the operator suites.
json spec_to_json(const ExperimentConfig& c) {
  return {{"kind", c.kind},
          {"max_iters", c.max_iters},
          {"grad_tol", c.tolerance("tol", 1e-8)},
          {"qbound", c.qbound}};
}

entropy::DivergenceSpec spec_from_json(const json& inst) {
  const json& s = at(inst, "divergence", "instance");
  const auto kind = entropy::parse_kind(at(s, "kind", "divergence").get<std::string>());
  if (kind == entropy::DivergenceKind::kGamma) {
    throw ValidationError("property suites support kinds umegaki, bs and variational");
  }
  entropy::DivergenceSpec spec;
  spec.kind = kind;
  spec.optimizer.max_iters = at(s, "max_iters", "divergence").get<int>();
  spec.optimizer.grad_tol = at(s, "grad_tol", "divergence").get<double>();
  spec.optimizer.qbound = at(s, "qbound", "divergence").get<double>();
  return spec;
}

DensityOperator state(const json& inst, const std::string& key) {
  return density_from_json(at(inst, key, "instance"), key);
}

struct Relent {
  ExtReal value;
  bool converged;
};

Relent relent_of(const entropy::DivergenceSpec& spec, const DensityOperator& rho,
                 const DensityOperator& sigma) {
  const entropy::EntropyResult r = entropy::relent_result(spec, rho, sigma);
  return {r.value, r.converged};
}

DensityOperator mix(double lambda, const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator::unnormalized(a.matrix() * cplx(lambda) + b.matrix() * cplx(1.0 - lambda));
}

// ---- fenchel ---------------------------------------------------------------

conjugate::SampledFunction fenchel_fixture(const json& inst, conjugate::Lattice& lattice) {
  const json& grid = at(inst, "grid", "instance");
  const Vec lo = vec_from_json(at(grid, "lo", "grid"), "grid.lo");
  const Vec hi = vec_from_json(at(grid, "hi", "grid"), "grid.hi");
  const Vec step = vec_from_json(at(grid, "step", "grid"), "grid.step");
  lattice = conjugate::uniform_lattice(lo, hi, step);
  const std::string fn = at(inst, "function", "instance").get<std::string>();
  if (fn == "exp") return conjugate::sample_exp(lattice);
  if (fn == "quadratic") return conjugate::sample_quadratic(lattice);
  if (fn == "norm") return conjugate::sample_norm(lattice);
  if (fn == "affine") {
    const json& p = at(inst, "params", "instance");
    return conjugate::sample_affine(lattice, vec_from_json(at(p, "a", "params"), "params.a"),
                                    at(p, "b", "params").get<double>());
  }
  throw ValidationError("function: unknown fixture '" + fn + "'");
}

json generate_fenchel(Rng& rng, const ExperimentConfig& c) {
  const std::size_t d = std::min<std::size_t>(std::max<std::size_t>(c.dim, 1), 2);
  const double step = d == 1 ? 0.25 : 0.5;
  const char* names[] = {"exp", "quadratic", "affine", "norm"};
  const std::string fn = names[rng.index(4)];
  json inst;
  inst["function"] = fn;
  inst["grid"] = {{"lo", Vec(d, -2.0)}, {"hi", Vec(d, 2.0)}, {"step", Vec(d, step)}};
  if (fn == "affine") {
    Vec a(d);
    for (double& v : a) v = rng.uniform(-1.0, 1.0);
    inst["params"] = {{"a", a}, {"b", rng.uniform(-1.0, 1.0)}};
  }
  const std::size_t per_axis = static_cast<std::size_t>(std::lround(4.0 / step)) + 1;
  Vec x(d), p(d);
  for (std::size_t k = 0; k < d; ++k) {
    x[k] = -2.0 + step * static_cast<double>(rng.index(per_axis));
    p[k] = rng.uniform(-2.0, 2.0);
  }
  inst["x"] = x;
  inst["p"] = p;
  return inst;
}

Check evaluate_fenchel(const json& inst) {
  conjugate::Lattice lattice;
  const conjugate::SampledFunction f = fenchel_fixture(inst, lattice);
  const Vec x = vec_from_json(at(inst, "x", "instance"), "x");
  const Vec p = vec_from_json(at(inst, "p", "instance"), "p");
  const auto idx = f.find(x);
  if (!idx) throw ValidationError("x: not a lattice point of the fixture");
  Check c;
  c.lhs = ExtReal(dot(p, x));
  c.rhs = f.value(*idx) + conjugate::conjugate_at(f, p);
  c.slack = 1e-12;
  return c;
}

// ---- gibbs -----------------------------------------------------------------

json generate_gibbs(Rng& rng, const ExperimentConfig& c) {
  const std::size_t d = std::max<std::size_t>(c.dim, 2);
  Vec q(d);
  for (double& v : q) v = rng.uniform(-3.0, 3.0);
  return {{"M", random_simplex(d, rng)}, {"Q", q}};
}

Check evaluate_gibbs(const json& inst) {
  const auto m = game::ClassicalDistribution::normalized(
      vec_from_json(at(inst, "M", "instance"), "M"));
  const Vec q = vec_from_json(at(inst, "Q", "instance"), "Q");
  const game::ClassicalDistribution tilt = game::best_response(m, q);
  Check c;
  c.lhs = ExtReal(game::log_partition(m, q));
  const ExtReal r = game::relative_entropy(tilt, m);
  c.rhs = ExtReal(dot(tilt.weights(), q) - r.value());
  c.slack = 1e-10;
  c.relation = Relation::kEqual;
  return c;
}

// ---- convexity -------------------------------------------------------------

json generate_convexity(Rng& rng, const ExperimentConfig& c) {
  json inst;
  inst["divergence"] = spec_to_json(c);
  inst["lambda"] = rng.index(2) == 0 ? 0.25 : 0.5;
  for (const char* key : {"rho1", "rho2", "sigma1", "sigma2"}) {
    inst[key] = density_to_json(random_density(c.dim, rng));
  }
  return inst;
}

Check evaluate_convexity(const json& inst) {
  const entropy::DivergenceSpec spec = spec_from_json(inst);
  const double lambda = at(inst, "lambda", "instance").get<double>();
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("lambda: must lie in [0, 1]");
  const DensityOperator r1 = state(inst, "rho1"), r2 = state(inst, "rho2");
  const DensityOperator s1 = state(inst, "sigma1"), s2 = state(inst, "sigma2");
  const Relent mixed = relent_of(spec, mix(lambda, r1, r2), mix(lambda, s1, s2));
  const Relent a = relent_of(spec, r1, s1);
  const Relent b = relent_of(spec, r2, s2);
  Check c;
  c.lhs = mixed.value;
  c.rhs = ExtReal(lambda * a.value.to_double() + (1.0 - lambda) * b.value.to_double());
  c.slack = 1e-6;
  c.converged = mixed.converged && a.converged && b.converged;
  return c;
}

// ---- monotonicity ----------------------------------------------------------

json generate_monotonicity(Rng& rng, const ExperimentConfig& c) {
  json inst;
  inst["divergence"] = spec_to_json(c);
  inst["rho"] = density_to_json(random_density(c.dim, rng));
  inst["sigma"] = density_to_json(random_density(c.dim, rng));
  inst["channel"] = channel_to_json(random_channel(c.dim, c.dim, 3, rng));
  return inst;
}

Check evaluate_monotonicity(const json& inst) {
  const entropy::DivergenceSpec spec = spec_from_json(inst);
  const DensityOperator rho = state(inst, "rho"), sigma = state(inst, "sigma");
  const QuantumChannel ch = channel_from_json(at(inst, "channel", "instance"));
  const Relent after = relent_of(spec, channels::apply(ch, rho), channels::apply(ch, sigma));
  const Relent before = relent_of(spec, rho, sigma);
  Check c;
  c.lhs = after.value;
  c.rhs = before.value;
  c.slack = 1e-6;
  c.converged = after.converged && before.converged;
  return c;
}

// ---- scaling ---------------------------------------------------------------

json generate_scaling(Rng& rng, const ExperimentConfig& c) {
  static constexpr double kMus[] = {0.5, 1.0, 2.0};
  const double mu = c.mu ? *c.mu : kMus[rng.index(3)];
  json inst;
  inst["divergence"] = spec_to_json(c);
  inst["divergence"]["kind"] = "variational";
  inst["mu"] = mu;
  inst["rho"] = density_to_json(random_density(c.dim, rng).scaled(mu));
  inst["M"] = density_to_json(random_density(c.dim, rng));
  return inst;
}

Check evaluate_scaling(const json& inst) {
  const entropy::DivergenceSpec spec = spec_from_json(inst);
  const double mu = at(inst, "mu", "instance").get<double>();
  const entropy::ScalingCheck s =
      entropy::scaling_check(state(inst, "rho"), state(inst, "M"), mu, spec.optimizer);
  Check c;
  c.lhs = ExtReal(s.lhs);
  c.rhs = ExtReal(s.rhs);
  c.slack = 1e-5;
  c.relation = Relation::kEqual;
  c.converged = s.converged;
  return c;
}

// ---- additivity ------------------------------------------------------------

json generate_additivity(Rng& rng, const ExperimentConfig& c) {
  json inst;
  inst["divergence"] = spec_to_json(c);
  inst["channel1"] = channel_to_json(random_channel(2, 2, 4, rng));
  inst["channel2"] = channel_to_json(random_channel(2, 2, 4, rng));
  inst["sigma1"] = density_to_json(random_density(2, rng));
  inst["sigma2"] = density_to_json(random_density(2, rng));
  return inst;
}

Check evaluate_additivity(const json& inst) {
  const entropy::DivergenceSpec spec = spec_from_json(inst);
  const channels::JAdditivity j = channels::product_input_J_additivity_check(
      {channel_from_json(at(inst, "channel1", "instance"), "channel1"),
       channel_from_json(at(inst, "channel2", "instance"), "channel2")},
      {state(inst, "sigma1"), state(inst, "sigma2")}, spec);
  Check c;
  c.lhs = ExtReal(j.lhs);
  c.rhs = ExtReal(j.rhs);
  c.slack = 1e-6;
  c.relation = Relation::kEqual;
  return c;
}

struct Suite {
  const char* name;
  const char* quantity;
  json (*generate)(Rng&, const ExperimentConfig&);
  Check (*evaluate)(const json&);
};

constexpr Suite kSuites[] = {
    {"fenchel", "fenchel_young", generate_fenchel, evaluate_fenchel},
    {"gibbs", "gibbs_duality", generate_gibbs, evaluate_gibbs},
    {"convexity", "joint_convexity", generate_convexity, evaluate_convexity},
    {"monotonicity", "cptp_monotonicity", generate_monotonicity, evaluate_monotonicity},
    {"scaling", "scaling_identity", generate_scaling, evaluate_scaling},
    {"additivity", "j_additivity", generate_additivity, evaluate_additivity},
};

const Suite& find_suite(const std::string& name) {
  for (const Suite& s : kSuites)
    if (name == s.name) return s;
  throw ValidationError("unknown property suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const Suite& s : kSuites) out.emplace_back(s.name);
  return out;
}

std::string suite_quantity(const std::string& suite) { return find_suite(suite).quantity; }

std::uint64_t instance_seed(std::uint64_t seed, int index) {
  // splitmix64 of (seed, index) so instances are independent of batch order.
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(index) + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

json generate_instance(const std::string& suite, std::uint64_t seed, int index,
                       const ExperimentConfig& config) {
  Rng rng(instance_seed(seed, index));
  return find_suite(suite).generate(rng, config);
}

Check evaluate_instance(const std::string& suite, const json& instance) {
  try {
    return find_suite(suite).evaluate(instance);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("instance: ") + e.what());
  }
}

}  // namespace entropy_duel::cli

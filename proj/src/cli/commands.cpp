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

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "entropy_duel/channels.hpp"
#include "entropy_duel/classical_game.hpp"
#include "entropy_duel/cli.hpp"
#include "entropy_duel/conjugate.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/matrix_json.hpp"
#include "entropy_duel/quantum_entropy.hpp"
#include "entropy_duel/random.hpp"
#include "entropy_duel/zero_sum.hpp"

namespace entropy_duel::cli {
namespace {

using nlohmann::json;
using Vec = std::vector<double>;

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

json load_json(const std::string& input) {
  if (!input.empty() && input.front() == '{') return parse_text(input, "inline JSON");
  std::ifstream in(input);
  if (!in) throw ValidationError("cannot open " + input);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), input);
}

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

Vec vec_field(const json& j, const std::string& key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) throw ValidationError(where + "." + key + ": expected an array");
  Vec v;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number()) {
      throw ValidationError(where + "." + key + "[" + std::to_string(i) +
                            "]: expected a number");
    }
    v.push_back(a[i].get<double>());
  }
  return v;
}

json signed_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  return v;
}

const std::string& single_input(const ExperimentConfig& c) {
  if (c.inputs.empty()) throw ValidationError(c.command + ": an input file is required");
  return c.inputs.front();
}

int effective_max_iters(const ExperimentConfig& c) {
  const char* env = std::getenv("ENTROPY_DUEL_MAX_ITERS");
  if (env == nullptr || *env == '\0') return c.max_iters;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > std::numeric_limits<int>::max()) {
    throw ValidationError(std::string("ENTROPY_DUEL_MAX_ITERS: expected a positive integer, got '") +
                          env + "'");
  }
  return static_cast<int>(v);
}

entropy::OptimOptions optim_options(const ExperimentConfig& c, double default_tol) {
  entropy::OptimOptions o;
  o.max_iters = effective_max_iters(c);
  o.grad_tol = c.tolerance("tol", default_tol);
  o.qbound = c.qbound;
  return o;
}

QuantumChannel load_channel(const std::string& spec) {
  if (!spec.empty() && (spec.front() == '{' || std::filesystem::exists(spec))) {
    return channel_from_json(load_json(spec));
  }
  return channels::named_channel(spec);
}

// ---- commands ---------------------------------------------------------------

json cmd_conjugate(const ExperimentConfig& c) {
  const json in = load_json(single_input(c));
  const json& grid = field(in, "grid", "input");
  const Vec lo = vec_field(grid, "lo", "grid");
  const Vec hi = vec_field(grid, "hi", "grid");
  const Vec step = vec_field(grid, "step", "grid");
  const Vec xstar = vec_field(in, "xstar", "input");
  const std::string fn = field(in, "function", "input").get<std::string>();
  if (xstar.size() != lo.size()) throw ValidationError("xstar: dimension does not match grid");

  const conjugate::Lattice lattice = conjugate::uniform_lattice(lo, hi, step);
  std::optional<conjugate::SampledFunction> f;
  ExtReal closed;
  if (fn == "exp") {
    f = conjugate::sample_exp(lattice);
    closed = conjugate::exp_conjugate(xstar);
  } else if (fn == "quadratic") {
    f = conjugate::sample_quadratic(lattice);
    closed = conjugate::quadratic_conjugate(xstar);
  } else if (fn == "norm") {
    f = conjugate::sample_norm(lattice);
    closed = conjugate::norm_conjugate(xstar);
  } else if (fn == "affine") {
    const json& p = field(in, "params", "input");
    const Vec a = vec_field(p, "a", "params");
    const double b = field(p, "b", "params").get<double>();
    f = conjugate::sample_affine(lattice, a, b);
    closed = conjugate::affine_conjugate(a, b, xstar);
  } else if (fn == "indicator") {
    f = conjugate::indicator_origin(lo.size(), step);
    closed = ExtReal(0.0);
  } else {
    throw ValidationError("function: expected exp, quadratic, affine, norm or indicator");
  }
  return {{"schema", kSchemaVersion},
          {"function", fn},
          {"value", ext_to_json(conjugate::conjugate_at(*f, xstar))},
          {"closed_form", ext_to_json(closed)},
          {"grid_tolerance", f->grid_tolerance()}};
}

json cmd_game_solve(const ExperimentConfig& c, bool& converged) {
  const json in = load_json(single_input(c));
  const json& p = field(in, "payoffs", "input");
  std::vector<Vec> rows;
  if (!p.is_array()) throw ValidationError("payoffs: expected an array of rows");
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row_holder = {{"row", p[i]}};
    rows.push_back(vec_field(row_holder, "row", "payoffs[" + std::to_string(i) + "]"));
  }
  game::ZeroSumOptions opts;
  opts.tol = c.tolerance("tol", 1e-9);
  opts.seed = c.seed;
  if (std::getenv("ENTROPY_DUEL_MAX_ITERS")) opts.max_iters = effective_max_iters(c);
  const game::ZeroSumSolution s = game::zero_sum_value(game::GameMatrix(rows), opts);
  converged = true;
  return {{"schema", kSchemaVersion},
          {"value", s.value},
          {"strategy", {{"row", s.profile.row.weights()}, {"col", s.profile.col.weights()}}},
          {"gap", s.gap},
          {"iterations", s.iterations}};
}

json cmd_game_estimate(const ExperimentConfig& c) {
  const json in = load_json(single_input(c));
  const Vec q = vec_field(in, "Q", "input");
  const game::MinimaxEstimate m = game::minimax_estimate(q);
  const game::EstimationOrders o = game::estimation_orders(q, c.resolution);
  return {{"schema", kSchemaVersion},
          {"value", m.value},
          {"strategy", m.m_star.weights()},
          {"maxmin", signed_to_json(o.maxmin)},
          {"gap", signed_to_json(o.gap)},
          {"resolution", c.resolution},
          {"iterations", 0}};
}

json cmd_game_biconj(const ExperimentConfig& c) {
  const json in = load_json(single_input(c));
  const auto p = game::ClassicalDistribution(vec_field(in, "P", "input"));
  const auto m = game::ClassicalDistribution(vec_field(in, "M", "input"));
  const game::BiconjugateResult r =
      game::biconjugate_relent(p, m, c.qbound, effective_max_iters(c));
  const ExtReal closed = game::relative_entropy(p, m);
  return {{"schema", kSchemaVersion},
          {"value", r.value},
          {"strategy", r.q},
          {"closed_form", ext_to_json(closed)},
          {"gap", closed.is_infinite() ? json("+inf") : json(closed.value() - r.value)},
          {"truncated", r.truncated},
          {"iterations", r.iterations}};
}

json cmd_entropy(const ExperimentConfig& c, bool& converged) {
  DensityOperator rho;
  DensityOperator sigma;
  if (c.inputs.empty()) {
    Rng rng(c.seed);
    rho = random_density(c.dim, rng);
    sigma = random_density(c.dim, rng);
  } else {
    const json in = load_json(c.inputs.front());
    rho = density_from_json(field(in, "rho", "input"), "rho");
    const char* key = in.contains("sigma") ? "sigma" : "M";
    sigma = density_from_json(field(in, key, "input"), key);
  }
  entropy::DivergenceSpec spec;
  spec.kind = entropy::parse_kind(c.kind);
  spec.optimizer = optim_options(c, 1e-8);
  if (spec.kind == entropy::DivergenceKind::kGamma) {
    spec.gamma_ref = c.gamma_file.empty() ? DensityOperator::maximally_mixed(rho.dim()).scaled(
                                                static_cast<double>(rho.dim()))
                                          : density_from_json(load_json(c.gamma_file), "gamma");
  }
  entropy::EntropyResult r;
  if (spec.kind == entropy::DivergenceKind::kVariational && c.mu) {
    spec.mu = *c.mu;
    r = entropy::variational_relent(rho, sigma, spec);
  } else {
    r = entropy::relent_result(spec, rho, sigma);
  }
  converged = r.converged;
  json witness = nullptr;
  if (r.witness) {
    witness = json::array();
    for (const cplx& z : *r.witness) witness.push_back({z.real(), z.imag()});
  }
  return {{"schema", kSchemaVersion},
          {"kind", c.kind},
          {"value", ext_to_json(r.value)},
          {"converged", r.converged},
          {"grad_norm", r.grad_norm},
          {"iterations", r.iterations},
          {"maximizer", r.maximizer ? matrix_to_json(r.maximizer->matrix()) : json(nullptr)},
          {"witness", witness}};
}

entropy::DivergenceSpec channel_spec(const ExperimentConfig& c) {
  entropy::DivergenceSpec spec;
  spec.kind = entropy::parse_kind(c.kind);
  if (spec.kind == entropy::DivergenceKind::kGamma) {
    throw ValidationError("channel commands support kinds umegaki, bs and variational");
  }
  spec.optimizer = optim_options(c, 1e-8);
  return spec;
}

channels::CapacityOptions capacity_options(const ExperimentConfig& c) {
  channels::CapacityOptions o;
  o.optim.max_iters = std::min(effective_max_iters(c), 200);
  if (std::getenv("ENTROPY_DUEL_MAX_ITERS")) o.optim.max_iters = effective_max_iters(c);
  o.optim.grad_tol = c.tolerance("capacity_tol", 1e-7);
  o.optim.qbound = c.qbound;
  o.restarts = c.restarts;
  o.seed = c.seed;
  return o;
}

const std::string& channel_arg(const ExperimentConfig& c, std::size_t i) {
  if (c.channels.empty()) throw ValidationError(c.command + ": --channel is required");
  return c.channels.at(std::min(i, c.channels.size() - 1));
}

json cmd_channel_info(const ExperimentConfig& c) {
  const QuantumChannel ch = load_channel(channel_arg(c, 0));
  return {{"schema", kSchemaVersion},
          {"dim_in", ch.dim_in()},
          {"dim_out", ch.dim_out()},
          {"kraus_count", ch.kraus().size()},
          {"completeness_error", ch.completeness_error()},
          {"channel", channel_to_json(ch)}};
}

json cmd_channel_mi(const ExperimentConfig& c) {
  const QuantumChannel ch = load_channel(channel_arg(c, 0));
  const DensityOperator sigma0 =
      c.inputs.empty() ? DensityOperator::maximally_mixed(ch.dim_in())
                       : density_from_json(load_json(c.inputs.front()), "input");
  const entropy::DivergenceSpec spec = channel_spec(c);
  const channels::CompoundState cs = channels::standard_compound(sigma0, ch);
  return {{"schema", kSchemaVersion},
          {"kind", c.kind},
          {"value", ext_to_json(channels::mutual_information(sigma0, ch, spec))},
          {"gap", nullptr},
          {"argmax_input", nullptr},
          {"input", density_to_json(sigma0)},
          {"marginal_error", cs.marginal_error()},
          {"iterations", 0}};
}

json cmd_channel_capacity(const ExperimentConfig& c, bool& converged) {
  const QuantumChannel ch = load_channel(channel_arg(c, 0));
  const channels::CapacityReport r = channels::capacity(ch, channel_spec(c), capacity_options(c));
  converged = r.converged;
  return {{"schema", kSchemaVersion},
          {"kind", c.kind},
          {"seed", c.seed},
          {"value", r.value},
          {"gap", nullptr},
          {"argmax_input", density_to_json(r.argmax_input)},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"grad_norm", r.grad_norm},
          {"best_restart", r.best_restart}};
}

json cmd_channel_additivity(const ExperimentConfig& c) {
  const QuantumChannel ch1 = load_channel(channel_arg(c, 0));
  const QuantumChannel ch2 = load_channel(channel_arg(c, 1));
  const channels::AdditivityReport r =
      channels::additivity_report(ch1, ch2, channel_spec(c), capacity_options(c));
  return {{"schema", kSchemaVersion},
          {"kind", c.kind},
          {"seed", c.seed},
          {"value", r.c12},
          {"gap", r.gap},
          {"c1", r.c1},
          {"c2", r.c2},
          {"c12", r.c12},
          {"argmax_input", nullptr},
          {"iterations", 0}};
}

// ---- output -----------------------------------------------------------------

void emit(const ExperimentConfig& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + c.output);
  f << text;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const ExperimentConfig& c, const json& result) {
  if (c.format == Format::kJson) return result.dump(2) + "\n";
  std::string text = "key,value\n";
  for (const auto& [k, v] : result.items()) {
    if (v.is_primitive()) text += k + "," + scalar_text(v) + "\n";
  }
  return text;
}

std::string violation_path(const ExperimentConfig& c) {
  if (!c.violation_out.empty()) return c.violation_out;
  if (!c.output.empty()) return c.output + ".violation.json";
  return "violation.json";
}

int cmd_proptest(const ExperimentConfig& c, const std::string& suite, std::ostream& out,
                 std::ostream& err) {
  ExperimentConfig local = c;
  local.max_iters = effective_max_iters(c);
  const std::string experiment = "proptest." + suite;
  const std::string quantity = suite_quantity(suite);
  std::vector<ReportRow> rows;
  std::optional<json> violation;
  int failed = 0;
  int unconverged = 0;
  for (int i = 0; i < c.n; ++i) {
    const json inst = generate_instance(suite, c.seed, i, local);
    const Check check = evaluate_instance(suite, inst);
    std::ostringstream id;
    id << suite << '-' << c.seed << '-' << std::setw(4) << std::setfill('0') << i;
    rows.push_back(make_row(experiment, id.str(), quantity, check));
    if (!check.converged) ++unconverged;
    if (!check.pass()) {
      ++failed;
      if (!violation) {
        violation = json{{"schema", kSchemaVersion},
                         {"experiment", experiment},
                         {"instance_id", id.str()},
                         {"instance", inst},
                         {"row", row_to_json(rows.back())}};
      }
    }
  }

  std::string text;
  if (c.format == Format::kCsv) {
    text = csv_header() + "\n";
    for (const auto& r : rows) text += row_to_csv(r) + "\n";
  } else {
    json report = {{"schema", kSchemaVersion},
                   {"experiment", experiment},
                   {"seed", c.seed},
                   {"n", c.n},
                   {"dim", c.dim},
                   {"kind", c.kind},
                   {"rng", std::string(Rng::kAlgorithm)},
                   {"rows", json::array()}};
    for (const auto& r : rows) report["rows"].push_back(row_to_json(r));
    report["summary"] = {{"total", rows.size()},
                         {"passed", static_cast<int>(rows.size()) - failed},
                         {"violations", failed},
                         {"unconverged", unconverged}};
    text = report.dump(2) + "\n";
  }
  emit(c, text, out);

  if (violation) {
    const std::string path = violation_path(c);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write " + path);
    f << violation->dump(2) << "\n";
    err << experiment << ": " << failed << " of " << rows.size()
        << " instances violate the property; first written to " << path << "\n";
    return kExitViolation;
  }
  if (unconverged > 0) {
    err << experiment << ": " << unconverged << " instances did not converge\n";
    return kExitConvergence;
  }
  return kExitOk;
}

int cmd_replay(const ExperimentConfig& c, std::ostream& out) {
  const json in = load_json(single_input(c));
  if (!in.is_object() || !in.contains("schema") || in.at("schema") != kSchemaVersion) {
    throw ValidationError("replay: unsupported or missing schema (expected 1)");
  }
  const std::string experiment = field(in, "experiment", "replay").get<std::string>();
  const std::string prefix = "proptest.";
  if (experiment.rfind(prefix, 0) != 0) {
    throw ValidationError("replay: experiment '" + experiment + "' is not a property suite");
  }
  const std::string suite = experiment.substr(prefix.size());
  const Check check = evaluate_instance(suite, field(in, "instance", "replay"));
  json gap = ext_to_json(check.violation());
  if (check.relation == Relation::kLessEqual && check.lhs.is_finite() && check.rhs.is_finite()) {
    gap = check.lhs.value() - check.rhs.value();
  }
  const json result = {{"schema", kSchemaVersion},
                       {"experiment", experiment},
                       {"instance_id", in.value("instance_id", "")},
                       {"relation", check.relation == Relation::kEqual ? "eq" : "le"},
                       {"lhs", ext_to_json(check.lhs)},
                       {"rhs", ext_to_json(check.rhs)},
                       {"gap", gap},
                       {"slack", check.slack},
                       {"converged", check.converged},
                       {"pass", check.pass()}};
  emit(c, render(c, result), out);
  return check.pass() ? kExitOk : kExitViolation;
}

int dispatch(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  bool converged = true;
  json result;
  const std::string& cmd = c.command;
  if (cmd == "conjugate") {
    result = cmd_conjugate(c);
  } else if (cmd == "game.solve") {
    result = cmd_game_solve(c, converged);
  } else if (cmd == "game.estimate") {
    result = cmd_game_estimate(c);
  } else if (cmd == "game.biconj") {
    result = cmd_game_biconj(c);
  } else if (cmd == "entropy") {
    result = cmd_entropy(c, converged);
  } else if (cmd == "channel.info") {
    result = cmd_channel_info(c);
  } else if (cmd == "channel.mi") {
    result = cmd_channel_mi(c);
  } else if (cmd == "channel.capacity") {
    result = cmd_channel_capacity(c, converged);
  } else if (cmd == "channel.additivity") {
    result = cmd_channel_additivity(c);
  } else if (cmd.rfind("proptest.", 0) == 0) {
    return cmd_proptest(c, cmd.substr(9), out, err);
  } else if (cmd == "replay") {
    return cmd_replay(c, out);
  } else {
    throw ValidationError("unknown command '" + cmd + "'");
  }
  emit(c, render(c, result), out);
  if (!converged) {
    err << cmd << ": optimizer did not reach the gradient tolerance\n";
    return kExitConvergence;
  }
  return kExitOk;
}

}  // namespace

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    return dispatch(config, out, err);
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << " (best " << e.best() << ")\n";
    return kExitConvergence;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"entropy_duel: conjugate duality, estimation games and quantum relative entropies"};
  app.require_subcommand(1);
  ExperimentConfig config;
  std::string format = "json";
  std::optional<double> tol;

  auto add_common = [&](CLI::App* sub, const std::string& command) {
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_option("--out", config.output, "output path (default stdout)");
    sub->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", tol, "tolerance (optimizer gradient or solver gap)");
    sub->add_option("--qbound", config.qbound, "box bound on |Q|");
    sub->add_option("--max-iters", config.max_iters, "optimizer iteration budget");
    sub->callback([&config, command] { config.command = command; });
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", config.kind, "umegaki, bs, gamma or variational")
        ->check(CLI::IsMember({"umegaki", "bs", "gamma", "variational"}));
  };

  auto* conj = app.add_subcommand("conjugate", "discrete convex conjugate of a sampled fixture");
  add_common(conj, "conjugate");
  conj->add_option("input", config.inputs, "JSON file or inline object")->required();

  auto* game = app.add_subcommand("game", "zero-sum games and the estimation game");
  game->require_subcommand(1);
  auto* solve = game->add_subcommand("solve", "value and equilibrium of a payoff matrix");
  add_common(solve, "game.solve");
  solve->add_option("input", config.inputs)->required();
  auto* estimate = game->add_subcommand("estimate", "minimax estimate for an award Q");
  add_common(estimate, "game.estimate");
  estimate->add_option("input", config.inputs)->required();
  estimate->add_option("--resolution", config.resolution, "simplex grid resolution");
  auto* biconj = game->add_subcommand("biconj", "relative entropy as a biconjugate");
  add_common(biconj, "game.biconj");
  biconj->add_option("input", config.inputs)->required();

  auto* ent = app.add_subcommand("entropy", "relative entropy of a pair of states");
  add_common(ent, "entropy");
  add_kind(ent);
  ent->add_option("input", config.inputs, "JSON with rho and sigma (random pair if omitted)");
  ent->add_option("--mu", config.mu, "trace of rho for the variational kind");
  ent->add_option("--gamma-file", config.gamma_file, "reference operator for the gamma kind");
  ent->add_option("--dim", config.dim, "dimension of the random pair");

  auto* chan = app.add_subcommand("channel", "channel mutual information and capacity");
  chan->require_subcommand(1);
  for (const char* name : {"info", "mi", "capacity", "additivity"}) {
    auto* sub = chan->add_subcommand(name);
    add_common(sub, std::string("channel.") + name);
    add_kind(sub);
    sub->add_option("--channel", config.channels, "named channel or channel JSON")->required();
    sub->add_option("--restarts", config.restarts, "seeded capacity restarts");
    if (std::string(name) == "mi") sub->add_option("input", config.inputs, "input state JSON");
  }
  // Shorthand for `channel capacity`.
  auto* cap = app.add_subcommand("capacity", "alias of channel capacity");
  add_common(cap, "channel.capacity");
  add_kind(cap);
  cap->add_option("--channel", config.channels)->required();
  cap->add_option("--restarts", config.restarts);

  auto* prop = app.add_subcommand("proptest", "seeded property suites");
  prop->require_subcommand(1);
  for (const std::string& suite : suite_names()) {
    auto* sub = prop->add_subcommand(suite);
    add_common(sub, "proptest." + suite);
    add_kind(sub);
    sub->add_option("--n", config.n, "number of instances");
    sub->add_option("--dim", config.dim, "operator dimension");
    sub->add_option("--mu", config.mu, "fixed trace for the scaling suite");
    sub->add_option("--violation-out", config.violation_out, "where to write a violation");
  }

  auto* replay = app.add_subcommand("replay", "re-run one serialized instance");
  add_common(replay, "replay");
  replay->add_option("input", config.inputs)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitValidation;
  }
  config.format = format == "csv" ? Format::kCsv : Format::kJson;
  if (tol) config.tolerances["tol"] = *tol;
  return run(config, out, err);
}

}  // namespace entropy_duel::cli

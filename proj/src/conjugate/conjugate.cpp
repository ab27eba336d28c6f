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

#include "entropy_duel/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace entropy_duel::conjugate {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_dim(std::size_t expected, std::size_t got, const char* op) {
  if (expected != got) {
    throw ValidationError(std::string(op) + ": dimension " + std::to_string(got) +
                          " does not match sample dimension " + std::to_string(expected));
  }
}

// Unflatten a row-major lattice index.
std::vector<std::size_t> multi_index(std::size_t flat, const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> idx(counts.size());
  for (std::size_t k = counts.size(); k-- > 0;) {
    idx[k] = flat % counts[k];
    flat /= counts[k];
  }
  return idx;
}

std::size_t flatten(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& counts) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) flat = flat * counts[k] + idx[k];
  return flat;
}

}  // namespace

std::size_t Lattice::size() const {
  std::size_t n = 1;
  for (std::size_t c : counts) n *= c;
  return n;
}

Vec Lattice::point(std::size_t flat) const {
  const auto idx = multi_index(flat, counts);
  Vec p(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    p[k] = origin[k] + static_cast<double>(idx[k]) * step[k];
  }
  return p;
}

Lattice uniform_lattice(std::span<const double> lo, std::span<const double> hi,
                        std::span<const double> step) {
  if (lo.empty() || lo.size() != hi.size() || lo.size() != step.size()) {
    throw ValidationError("uniform_lattice: lo, hi and step must have equal nonzero length");
  }
  Lattice lat;
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!(step[k] > 0.0) || !(hi[k] >= lo[k])) {
      throw ValidationError("uniform_lattice: need step > 0 and hi >= lo");
    }
    lat.origin.push_back(lo[k]);
    lat.step.push_back(step[k]);
    lat.counts.push_back(static_cast<std::size_t>(std::llround((hi[k] - lo[k]) / step[k])) + 1);
  }
  return lat;
}

Lattice uniform_lattice_1d(double lo, double hi, double step) {
  const double l[] = {lo};
  const double h[] = {hi};
  const double s[] = {step};
  return uniform_lattice(l, h, s);
}

SampledFunction::SampledFunction(std::vector<Vec> points, std::vector<ExtReal> values,
                                 std::optional<Lattice> lattice)
    : points_(std::move(points)), values_(std::move(values)), lattice_(std::move(lattice)) {
  if (points_.empty()) throw ValidationError("SampledFunction: no sample points");
  if (points_.size() != values_.size()) {
    throw ValidationError("SampledFunction: points and values differ in length");
  }
  const std::size_t d = points_.front().size();
  if (d == 0) throw ValidationError("SampledFunction: zero-dimensional points");
  for (const auto& p : points_) require_dim(d, p.size(), "SampledFunction");
  if (std::none_of(values_.begin(), values_.end(),
                   [](const ExtReal& v) { return v.is_finite(); })) {
    throw ValidationError("SampledFunction: empty effective domain");
  }
  if (lattice_ && (lattice_->dim() != d || lattice_->size() != points_.size())) {
    throw ValidationError("SampledFunction: lattice does not describe the points");
  }
}

SampledFunction SampledFunction::on_lattice(
    const Lattice& lattice, const std::function<ExtReal(std::span<const double>)>& f) {
  std::vector<Vec> pts;
  std::vector<ExtReal> vals;
  const std::size_t n = lattice.size();
  pts.reserve(n);
  vals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    pts.push_back(lattice.point(i));
    vals.push_back(f(pts.back()));
  }
  return SampledFunction(std::move(pts), std::move(vals), lattice);
}

std::optional<std::size_t> SampledFunction::find(std::span<const double> x) const {
  require_dim(dim(), x.size(), "SampledFunction::find");
  double tol = 1e-12;
  if (lattice_) {
    tol = 1e-9 * *std::max_element(lattice_->step.begin(), lattice_->step.end());
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < x.size() && match; ++k) {
      match = std::abs(points_[i][k] - x[k]) <= tol;
    }
    if (match) return i;
  }
  return std::nullopt;
}

double SampledFunction::lipschitz_estimate() const {
  if (!lattice_) return 0.0;
  const Lattice& lat = *lattice_;
  double best = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (values_[i].is_infinite()) continue;
    auto idx = multi_index(i, lat.counts);
    for (std::size_t k = 0; k < lat.dim(); ++k) {
      if (idx[k] + 1 >= lat.counts[k]) continue;
      ++idx[k];
      const ExtReal& nb = values_[flatten(idx, lat.counts)];
      --idx[k];
      if (nb.is_infinite()) continue;
      best = std::max(best, std::abs(nb.value() - values_[i].value()) / lat.step[k]);
    }
  }
  return best;
}

double SampledFunction::grid_tolerance() const {
  if (!lattice_) return 0.0;
  double h = 0.0;
  for (std::size_t k = 0; k < lattice_->dim(); ++k) {
    if (lattice_->counts[k] > 1) h = std::max(h, lattice_->step[k]);
  }
  return lipschitz_estimate() * h;
}

ExtReal conjugate_at(const SampledFunction& f, std::span<const double> xstar) {
  require_dim(f.dim(), xstar.size(), "conjugate_at");
  bool any = false;
  double best = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.value(i).is_infinite()) continue;
    const double v = dot(xstar, f.point(i)) - f.value(i).value();
    if (!any || v > best) {
      best = v;
      any = true;
    }
  }
  return ExtReal(best);
}

SampledFunction conjugate_on(const SampledFunction& f, const std::vector<Vec>& duals) {
  std::vector<ExtReal> vals;
  vals.reserve(duals.size());
  for (const auto& p : duals) vals.push_back(conjugate_at(f, p));
  return SampledFunction(duals, std::move(vals));
}

ExtReal biconjugate_at(const SampledFunction& f, const std::vector<Vec>& duals,
                       std::span<const double> x) {
  return conjugate_at(conjugate_on(f, duals), x);
}

ExtReal fenchel_gap(const SampledFunction& f, std::span<const double> x,
                    std::span<const double> p) {
  const auto idx = f.find(x);
  if (!idx) throw ValidationError("fenchel_gap: x is not a sample point");
  require_dim(f.dim(), p.size(), "fenchel_gap");
  const ExtReal fx = f.value(*idx);
  if (fx.is_infinite()) return ExtReal::plus_infinity();
  return fx + conjugate_at(f, p) - dot(p, f.point(*idx));
}

double support_function(const std::vector<Vec>& vertices, std::span<const double> xstar) {
  if (vertices.empty()) throw ValidationError("support_function: no vertices");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices) {
    require_dim(v.size(), xstar.size(), "support_function");
    best = std::max(best, dot(v, xstar));
  }
  return best;
}

SampledFunction inf_convolution(const SampledFunction& f, const SampledFunction& g) {
  if (!f.lattice() || !g.lattice()) {
    throw ValidationError("inf_convolution: both functions need a lattice");
  }
  const Lattice& lf = *f.lattice();
  const Lattice& lg = *g.lattice();
  if (lf.dim() != lg.dim()) throw ValidationError("inf_convolution: dimension mismatch");
  const std::size_t d = lf.dim();

  Lattice out;
  for (std::size_t k = 0; k < d; ++k) {
    double step = lf.counts[k] > 1 ? lf.step[k] : lg.step[k];
    if (lf.counts[k] > 1 && lg.counts[k] > 1 &&
        std::abs(lf.step[k] - lg.step[k]) > 1e-12 * std::max(lf.step[k], lg.step[k])) {
      throw ValidationError("inf_convolution: lattice steps differ on axis " +
                            std::to_string(k));
    }
    const double offset = (lg.origin[k] - lf.origin[k]) / step;
    if (std::abs(offset - std::round(offset)) > 1e-9) {
      throw ValidationError("inf_convolution: lattice origins are not aligned on axis " +
                            std::to_string(k));
    }
    out.origin.push_back(lf.origin[k] + lg.origin[k]);
    out.step.push_back(step);
    out.counts.push_back(lf.counts[k] + lg.counts[k] - 1);
  }

  const std::size_t n = out.size();
  std::vector<bool> seen(n, false);
  std::vector<double> best(n, 0.0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.value(i).is_infinite()) continue;
    const auto fi = multi_index(i, lf.counts);
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.value(j).is_infinite()) continue;
      const auto gj = multi_index(j, lg.counts);
      std::vector<std::size_t> sum(d);
      for (std::size_t k = 0; k < d; ++k) sum[k] = fi[k] + gj[k];
      const std::size_t s = flatten(sum, out.counts);
      const double v = f.value(i).value() + g.value(j).value();
      if (!seen[s] || v < best[s]) {
        best[s] = v;
        seen[s] = true;
      }
    }
  }
  std::vector<Vec> pts;
  std::vector<ExtReal> vals;
  pts.reserve(n);
  vals.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    pts.push_back(out.point(s));
    vals.push_back(seen[s] ? ExtReal(best[s]) : ExtReal::plus_infinity());
  }
  return SampledFunction(std::move(pts), std::move(vals), out);
}

InfConvolutionCheck inf_convolution_check(const SampledFunction& f, const SampledFunction& g,
                                          std::span<const double> xstar) {
  const SampledFunction h = inf_convolution(f, g);
  return {conjugate_at(h, xstar), conjugate_at(f, xstar) + conjugate_at(g, xstar),
          f.grid_tolerance() + g.grid_tolerance()};
}

SampledFunction sample_exp(const Lattice& lattice) {
  return SampledFunction::on_lattice(lattice, [](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += std::exp(v);
    return ExtReal(s);
  });
}

SampledFunction sample_quadratic(const Lattice& lattice) {
  return SampledFunction::on_lattice(
      lattice, [](std::span<const double> x) { return ExtReal(0.5 * dot(x, x)); });
}

SampledFunction sample_affine(const Lattice& lattice, std::span<const double> a, double b) {
  require_dim(lattice.dim(), a.size(), "sample_affine");
  const Vec coef(a.begin(), a.end());
  return SampledFunction::on_lattice(
      lattice, [coef, b](std::span<const double> x) { return ExtReal(dot(coef, x) - b); });
}

SampledFunction sample_norm(const Lattice& lattice) {
  return SampledFunction::on_lattice(
      lattice, [](std::span<const double> x) { return ExtReal(std::sqrt(dot(x, x))); });
}

SampledFunction indicator_origin(std::size_t dim, std::span<const double> step) {
  if (dim == 0 || step.size() != dim) {
    throw ValidationError("indicator_origin: need one step per dimension");
  }
  Lattice lat{Vec(dim, 0.0), Vec(step.begin(), step.end()), std::vector<std::size_t>(dim, 1)};
  return SampledFunction({Vec(dim, 0.0)}, {ExtReal(0.0)}, lat);
}

ExtReal exp_conjugate(std::span<const double> p) {
  double s = 0.0;
  for (double v : p) {
    if (v < 0.0) return ExtReal::plus_infinity();
    if (v > 0.0) s += v * std::log(v) - v;
  }
  return ExtReal(s);
}

ExtReal quadratic_conjugate(std::span<const double> p) { return ExtReal(0.5 * dot(p, p)); }

ExtReal affine_conjugate(std::span<const double> a, double b, std::span<const double> p) {
  require_dim(a.size(), p.size(), "affine_conjugate");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - p[i]) > 1e-12) return ExtReal::plus_infinity();
  }
  return ExtReal(b);
}

ExtReal norm_conjugate(std::span<const double> p) {
  return dot(p, p) <= 1.0 + 1e-12 ? ExtReal(0.0) : ExtReal::plus_infinity();
}

}  // namespace entropy_duel::conjugate

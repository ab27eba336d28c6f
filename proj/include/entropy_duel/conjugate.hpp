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

// Legendre-Fenchel conjugation of functions sampled on finite point sets.
//
// f*(p) = sup_x <p, x> - f(x) is evaluated as a maximum over the samples, so
// every inequality that holds for the exact conjugate (Fenchel-Young, order
// reversal, f** <= f, convexity of f*) holds exactly for the discrete one.
// Agreement with closed forms is only up to grid resolution; checks report
// that resolution as Lipschitz estimate x step.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "entropy_duel/ext_real.hpp"

namespace entropy_duel::conjugate {

using Vec = std::vector<double>;

// Axis-aligned lattice origin + i * step, enumerated row-major (last axis
// fastest).
struct Lattice {
  Vec origin;
  Vec step;
  std::vector<std::size_t> counts;

  std::size_t dim() const noexcept { return origin.size(); }
  std::size_t size() const;
  Vec point(std::size_t flat) const;
};

// [lo, hi] with the given step; counts = round((hi - lo)/step) + 1.
Lattice uniform_lattice(std::span<const double> lo, std::span<const double> hi,
                        std::span<const double> step);
Lattice uniform_lattice_1d(double lo, double hi, double step);

class SampledFunction {
 public:
  // Throws ValidationError if points is empty, dimensions disagree, or every
  // value is +infinity.
  SampledFunction(std::vector<Vec> points, std::vector<ExtReal> values,
                  std::optional<Lattice> lattice = std::nullopt);

  static SampledFunction on_lattice(const Lattice& lattice,
                                    const std::function<ExtReal(std::span<const double>)>& f);

  std::size_t dim() const noexcept { return points_.front().size(); }
  std::size_t size() const noexcept { return points_.size(); }
  const Vec& point(std::size_t i) const { return points_[i]; }
  const ExtReal& value(std::size_t i) const { return values_[i]; }
  const std::vector<ExtReal>& values() const noexcept { return values_; }
  const std::optional<Lattice>& lattice() const noexcept { return lattice_; }

  // Index of the sample equal to x (componentwise within 1e-9 of the
  // coarsest lattice step, or 1e-12 without a lattice).
  std::optional<std::size_t> find(std::span<const double> x) const;

  // Largest |f(a) - f(b)| / |a - b| over finite lattice neighbours; 0 if
  // there is no lattice.
  double lipschitz_estimate() const;
  // Lipschitz estimate x largest step.
  double grid_tolerance() const;

 private:
  std::vector<Vec> points_;
  std::vector<ExtReal> values_;
  std::optional<Lattice> lattice_;
};

// max over samples of <xstar, p> - f(p).
ExtReal conjugate_at(const SampledFunction& f, std::span<const double> xstar);

// f* evaluated on a set of dual points, as a new sampled function.
SampledFunction conjugate_on(const SampledFunction& f, const std::vector<Vec>& duals);

// (f*)*(x) with f* sampled on `duals`. Never exceeds f(x) at sample points.
ExtReal biconjugate_at(const SampledFunction& f, const std::vector<Vec>& duals,
                       std::span<const double> x);

// f(x) + f*(p) - <p, x>; x must be a sample point.
ExtReal fenchel_gap(const SampledFunction& f, std::span<const double> x,
                    std::span<const double> p);

// sup over vertices v of <v, xstar>: the support function of conv(vertices).
double support_function(const std::vector<Vec>& vertices, std::span<const double> xstar);

// Infimal convolution (f * g)(x) = inf_y f(y) + g(x - y) on the sum lattice.
// Both inputs need lattices with matching steps (axes with a single sample
// take the other lattice's step) and origins offset by whole steps.
SampledFunction inf_convolution(const SampledFunction& f, const SampledFunction& g);

struct InfConvolutionCheck {
  ExtReal lhs;        // (f * g)*(xstar)
  ExtReal rhs;        // f*(xstar) + g*(xstar)
  double tolerance;   // grid bound for |lhs - rhs|
};

InfConvolutionCheck inf_convolution_check(const SampledFunction& f,
                                          const SampledFunction& g,
                                          std::span<const double> xstar);

// Fixtures on a lattice. affine: <a, x> - b. indicator: 0 at the origin only.
SampledFunction sample_exp(const Lattice& lattice);            // sum_i exp(x_i)
SampledFunction sample_quadratic(const Lattice& lattice);      // |x|^2 / 2
SampledFunction sample_affine(const Lattice& lattice, std::span<const double> a, double b);
SampledFunction sample_norm(const Lattice& lattice);           // |x|_2
SampledFunction indicator_origin(std::size_t dim, std::span<const double> step);

// Closed-form conjugates, forced by the definition.
ExtReal exp_conjugate(std::span<const double> p);        // sum p ln p - p (0 ln 0 = 0)
ExtReal quadratic_conjugate(std::span<const double> p);  // |p|^2 / 2
// b at p = a, +infinity elsewhere.
ExtReal affine_conjugate(std::span<const double> a, double b, std::span<const double> p);
// Indicator of the closed unit ball: 0 if |p| <= 1.
ExtReal norm_conjugate(std::span<const double> p);

}  // namespace entropy_duel::conjugate

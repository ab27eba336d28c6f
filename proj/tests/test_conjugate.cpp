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

#include <gtest/gtest.h>

#include <cmath>

#include "entropy_duel/conjugate.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/random.hpp"

namespace entropy_duel::conjugate {
namespace {

Vec v1(double x) { return Vec{x}; }

SampledFunction random_function(const Lattice& lat, Rng& rng) {
  return SampledFunction::on_lattice(lat, [&](std::span<const double>) {
    return ExtReal(rng.uniform(-2.0, 2.0));
  });
}

TEST(ExtRealArithmetic, InfinityIsTagged) {
  const ExtReal inf = ExtReal::plus_infinity();
  EXPECT_TRUE((inf + 1.0).is_infinite());
  EXPECT_TRUE(ExtReal(3.0) < inf);
  EXPECT_THROW(ExtReal(std::nan("")), ValidationError);
  EXPECT_THROW(ExtReal(-INFINITY), ValidationError);
  EXPECT_THROW(static_cast<void>(inf.value()), DomainError);
}

TEST(Conjugate, ExponentialAtOne) {
  const SampledFunction f = sample_exp(uniform_lattice_1d(-5.0, 5.0, 1e-3));
  EXPECT_NEAR(conjugate_at(f, v1(1.0)).value(), -1.0, 1e-3);
  EXPECT_NEAR(exp_conjugate(v1(1.0)).value(), -1.0, 1e-15);
}

TEST(Conjugate, AffineAndIndicator) {
  const Vec a{0.5, -1.0};
  const Lattice lat = uniform_lattice(Vec{-2, -2}, Vec{2, 2}, Vec{0.5, 0.5});
  const SampledFunction f = sample_affine(lat, a, 0.75);
  EXPECT_NEAR(conjugate_at(f, a).value(), 0.75, 1e-15);
  EXPECT_TRUE(affine_conjugate(a, 0.75, Vec{0.0, 0.0}).is_infinite());

  const SampledFunction ind = indicator_origin(2, Vec{0.5, 0.5});
  Rng rng(1);
  for (int i = 0; i < 10; ++i) {
    EXPECT_EQ(conjugate_at(ind, Vec{rng.normal(), rng.normal()}).value(), 0.0);
  }
}

TEST(FenchelYoung, Examples) {
  const SampledFunction q = sample_quadratic(uniform_lattice_1d(-3.0, 3.0, 0.01));
  EXPECT_NEAR(fenchel_gap(q, v1(1.0), v1(1.0)).value(), 0.0, q.grid_tolerance());
  const SampledFunction e = sample_exp(uniform_lattice_1d(-5.0, 5.0, 1e-3));
  EXPECT_NEAR(fenchel_gap(e, v1(0.0), v1(1.0)).value(), 0.0, 1e-3);
}

TEST(FenchelYoung, GapNonnegativeOnRandomFunctions) {
  Rng rng(2);
  const Lattice lat = uniform_lattice(Vec{-1, -1}, Vec{1, 1}, Vec{0.25, 0.25});
  for (int t = 0; t < 50; ++t) {
    const SampledFunction f = random_function(lat, rng);
    for (int k = 0; k < 10; ++k) {
      const Vec x = f.point(rng.index(f.size()));
      const Vec p{rng.normal(), rng.normal()};
      EXPECT_GE(fenchel_gap(f, x, p).value(), -1e-12);
    }
  }
}

TEST(Conjugate, OrderReversalIsExact) {
  Rng rng(3);
  const Lattice lat = uniform_lattice_1d(-2.0, 2.0, 0.1);
  for (int t = 0; t < 50; ++t) {
    const SampledFunction f = random_function(lat, rng);
    std::vector<Vec> pts;
    std::vector<ExtReal> gv;
    for (std::size_t i = 0; i < f.size(); ++i) {
      pts.push_back(f.point(i));
      gv.push_back(f.value(i) + rng.uniform(0.0, 1.0));
    }
    const SampledFunction g(pts, gv, lat);
    for (int k = 0; k < 10; ++k) {
      const Vec p = v1(rng.normal() * 3.0);
      EXPECT_GE(conjugate_at(f, p), conjugate_at(g, p));
    }
  }
}

TEST(Conjugate, ConvexInDualVariable) {
  Rng rng(4);
  const Lattice lat = uniform_lattice(Vec{-1, -1}, Vec{1, 1}, Vec{0.5, 0.5});
  for (int t = 0; t < 30; ++t) {
    const SampledFunction f = random_function(lat, rng);
    const Vec p1{rng.normal(), rng.normal()};
    const Vec p2{rng.normal(), rng.normal()};
    for (double s : {0.25, 0.5, 0.75}) {
      const Vec mid{s * p1[0] + (1 - s) * p2[0], s * p1[1] + (1 - s) * p2[1]};
      EXPECT_LE(conjugate_at(f, mid).value(),
                s * conjugate_at(f, p1).value() + (1 - s) * conjugate_at(f, p2).value() + 1e-12);
    }
  }
}

TEST(Biconjugate, DominatedByOriginal) {
  Rng rng(5);
  const Lattice lat = uniform_lattice_1d(-2.0, 2.0, 0.1);
  std::vector<Vec> duals;
  for (int k = -40; k <= 40; ++k) duals.push_back(v1(0.25 * k));
  for (int t = 0; t < 20; ++t) {
    const SampledFunction f = random_function(lat, rng);
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_LE(biconjugate_at(f, duals, f.point(i)).value(), f.value(i).value() + 1e-12);
    }
  }
}

TEST(Biconjugate, RecoversConvexFunctions) {
  const Lattice lat = uniform_lattice_1d(-2.0, 2.0, 0.05);
  std::vector<Vec> duals;
  for (int k = -300; k <= 300; ++k) duals.push_back(v1(0.025 * k));
  for (const SampledFunction& f : {sample_quadratic(lat), sample_exp(lat)}) {
    const double tol = f.grid_tolerance();
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_NEAR(biconjugate_at(f, duals, f.point(i)).value(), f.value(i).value(), tol);
    }
  }
}

TEST(Biconjugate, ExactOnConvexNonsmoothFunction) {
  // |x| on the grid: every sample lies on the convex envelope.
  const SampledFunction f = sample_norm(uniform_lattice_1d(-2.0, 2.0, 0.25));
  std::vector<Vec> duals;
  for (int k = -8; k <= 8; ++k) duals.push_back(v1(0.125 * k));
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_NEAR(biconjugate_at(f, duals, f.point(i)).value(), f.value(i).value(), 1e-12);
  }
  EXPECT_TRUE(norm_conjugate(v1(1.5)).is_infinite());
  EXPECT_EQ(norm_conjugate(v1(0.5)).value(), 0.0);
}

TEST(SupportFunction, Examples) {
  const std::vector<Vec> simplex{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(support_function(simplex, Vec{0.3, -2.0, 1.7}), 1.7);
  EXPECT_EQ(support_function({Vec{2.0, -1.0}}, Vec{3.0, 4.0}), 2.0);
  const std::vector<Vec> square{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  EXPECT_EQ(support_function(square, Vec{2.0, 3.0}), 5.0);
}

TEST(InfConvolution, IndicatorIsUnit) {
  const Lattice lat = uniform_lattice_1d(-2.0, 2.0, 0.25);
  Rng rng(6);
  const SampledFunction f = random_function(lat, rng);
  const SampledFunction h = inf_convolution(f, indicator_origin(1, Vec{0.25}));
  ASSERT_EQ(h.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_NEAR(h.point(i)[0], f.point(i)[0], 1e-12);
    EXPECT_EQ(h.value(i), f.value(i));
  }
}

TEST(InfConvolution, QuadraticIdentity) {
  const Lattice lat = uniform_lattice_1d(-5.0, 5.0, 1e-2);
  const SampledFunction f = sample_quadratic(lat);
  const InfConvolutionCheck c = inf_convolution_check(f, f, v1(1.0));
  EXPECT_NEAR(c.lhs.value(), 1.0, 2e-2);
  EXPECT_NEAR(c.rhs.value(), 1.0, 2e-2);
  EXPECT_LE(std::abs(c.lhs.value() - c.rhs.value()), c.tolerance);
}

TEST(InfConvolution, AffineAlgebra) {
  const Vec a{1.5};
  const Lattice lat = uniform_lattice_1d(-2.0, 2.0, 0.5);
  const SampledFunction f = sample_affine(lat, a, 0.5);
  const SampledFunction g = sample_affine(lat, a, -0.25);
  const InfConvolutionCheck c = inf_convolution_check(f, g, a);
  EXPECT_TRUE(c.lhs.is_finite());
  EXPECT_TRUE(c.rhs.is_finite());
  // Both sides equal b + c on the grid.
  EXPECT_NEAR(c.lhs.value(), 0.25, 1e-12);
  EXPECT_NEAR(c.rhs.value(), 0.25, 1e-12);
}

TEST(SampledFunction, Validation) {
  EXPECT_THROW(SampledFunction({}, {}), ValidationError);
  EXPECT_THROW(SampledFunction({Vec{0.0}}, {ExtReal::plus_infinity()}), ValidationError);
  EXPECT_THROW(SampledFunction({Vec{0.0}, Vec{0.0, 1.0}}, {ExtReal(1.0), ExtReal(2.0)}),
               ValidationError);
  const SampledFunction f = sample_quadratic(uniform_lattice_1d(-1.0, 1.0, 0.5));
  EXPECT_TRUE(f.find(v1(0.5)).has_value());
  EXPECT_FALSE(f.find(v1(0.3)).has_value());
}

}  // namespace
}  // namespace entropy_duel::conjugate

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
#include <iostream>

#include "entropy_duel/channels.hpp"
#include "entropy_duel/classical_game.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/quantum_entropy.hpp"
#include "entropy_duel/random.hpp"
#include "oracles.hpp"

namespace entropy_duel::entropy {
namespace {

using oracle::Vec;

const double kLn2 = std::log(2.0);

DensityOperator diag(const Vec& p) { return oracle::diagonal_state(p); }

struct CommutingPair {
  DensityOperator rho;
  DensityOperator sigma;
  Vec p;
  Vec m;
};

CommutingPair commuting_pair(std::size_t d, Rng& rng, double mass = 1.0) {
  Vec p = random_simplex(d, rng);
  const Vec m = random_simplex(d, rng);
  for (double& x : p) x *= mass;
  const CMatrix u = random_unitary(d, rng);
  return {oracle::rotated_diagonal(p, u), oracle::rotated_diagonal(m, u), p, m};
}

DivergenceSpec spec_for(DivergenceKind kind) {
  switch (kind) {
    case DivergenceKind::kUmegaki:
      return DivergenceSpec::umegaki();
    case DivergenceKind::kBs:
      return DivergenceSpec::bs();
    case DivergenceKind::kVariational:
      return DivergenceSpec::variational();
    case DivergenceKind::kGamma:
      break;
  }
  throw ValidationError("gamma needs a reference state");
}

// Compressions are rank-deficient, so bs is evaluated on the support there.
DivergenceSpec support_spec(DivergenceKind kind) {
  DivergenceSpec s = spec_for(kind);
  s.mode = SupportMode::kSupport;
  return s;
}

const DivergenceKind kMonotoneKinds[] = {DivergenceKind::kUmegaki, DivergenceKind::kBs,
                                         DivergenceKind::kVariational};

double value(const DivergenceSpec& s, const DensityOperator& a, const DensityOperator& b) {
  return relent(s, a, b).value();
}

// Tr(rho Q) - ln Tr(M e^Q) with the Taylor exponential.
double oracle_objective(const DensityOperator& rho, const DensityOperator& m,
                        const HermitianOperator& q) {
  const CMatrix e = oracle::taylor_exp(q.matrix());
  return trace_product(rho.matrix(), q.matrix()).real() -
         std::log(trace_product(m.matrix(), e).real());
}

TEST(Umegaki, Examples) {
  Rng rng(1);
  const DensityOperator rho = random_density(3, rng);
  EXPECT_NEAR(umegaki(rho, rho).value(), 0.0, 1e-12);
  EXPECT_NEAR(umegaki(diag({1, 0}), DensityOperator::maximally_mixed(2)).value(), kLn2, 1e-14);
  for (int i = 0; i < 20; ++i) {
    const CommutingPair c = commuting_pair(2 + rng.index(3), rng);
    EXPECT_NEAR(umegaki(diag(c.p), diag(c.m)).value(), oracle::classical_relent(c.p, c.m),
                1e-12);
  }
}

TEST(Umegaki, InfiniteOutsideSupportWithWitness) {
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  const DensityOperator sigma = diag({1, 0});
  EXPECT_TRUE(umegaki(rho, sigma).is_infinite());
  const EntropyResult r = relent_result(DivergenceSpec::umegaki(), rho, sigma);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NEAR(std::abs((*r.witness)[1]), 1.0, 1e-12);
  EXPECT_THROW(umegaki(rho, sigma, SupportMode::kStrict), DomainError);
  EXPECT_TRUE(bs_relent(rho, sigma, SupportMode::kSupport).is_infinite());
  EXPECT_TRUE(relent(DivergenceSpec::variational(), rho, sigma).is_infinite());
}

TEST(Bs, CommutingCollapse) {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    const CommutingPair c = commuting_pair(2 + rng.index(3), rng);
    EXPECT_NEAR(bs_relent(c.rho, c.sigma).value(), umegaki(c.rho, c.sigma).value(), 1e-10);
  }
  const DensityOperator rho = random_density(3, rng);
  EXPECT_NEAR(bs_relent(rho, rho).value(), 0.0, 1e-12);
}

// Tr sigma eta(sigma^{-1/2} rho sigma^{-1/2}) with eta(x) = x ln x, the
// second of the two equivalent evaluation routes.
double bs_second_route(const DensityOperator& rho, const DensityOperator& sigma) {
  const HermitianOperator root = mat_sqrt(sigma.hermitian());
  const HermitianOperator inv_root = mat_inverse(root);
  const HermitianOperator x(sandwich(inv_root.matrix(), rho.matrix()));
  const HermitianOperator eta = mat_fn(x, [](double t) { return t > 0 ? t * std::log(t) : 0.0; });
  return trace_product(sigma.matrix(), eta.matrix()).real();
}

TEST(Bs, TwoRouteOracleAndDominance) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator sigma = random_density(d, rng);
    const double b = bs_relent(rho, sigma).value();
    EXPECT_NEAR(b, bs_second_route(rho, sigma), 1e-9 * std::max(1.0, std::abs(b)));
    EXPECT_GE(b, umegaki(rho, sigma).value() - 1e-9);
  }
  EXPECT_THROW(bs_relent(random_density(2, rng), diag({1, 0})), DomainError);
}

TEST(Gamma, Reductions) {
  Rng rng(4);
  const DensityOperator id = DensityOperator::unnormalized(CMatrix::identity(2));
  const DensityOperator rho = random_density(2, rng);
  EXPECT_NEAR(gamma_relent(rho, rho, id).value(), 0.0, 1e-12);
  for (int i = 0; i < 20; ++i) {
    const CommutingPair c = commuting_pair(2 + rng.index(3), rng);
    const DensityOperator eye = DensityOperator::unnormalized(CMatrix::identity(c.p.size()));
    EXPECT_NEAR(gamma_relent(c.rho, c.sigma, eye).value(), umegaki(c.rho, c.sigma).value(),
                1e-10);
  }
  double worst_gap = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DensityOperator r = random_density(2, rng);
    const DensityOperator s = random_density(2, rng);
    const double at_sigma = gamma_relent(r, s, s).value();
    EXPECT_NEAR(at_sigma, bs_relent(r, s).value(), 1e-8);
    const double at_id = gamma_relent(r, s, id).value();
    EXPECT_TRUE(std::isfinite(at_id));
    worst_gap = std::max(worst_gap, std::abs(at_id - umegaki(r, s).value()));
  }
  // Off the commuting set the identity-reference gap is reported, not asserted.
  std::cout << "gamma(I) vs umegaki, largest non-commuting gap: " << worst_gap << "\n";
}

TEST(Gamma, TableFunction) {
  const GFunction g = GFunction::from_table({0.0, 1.0, 4.0}, {0.0, 0.0, 3.0});
  EXPECT_DOUBLE_EQ(g(2.0), 1.0);
  EXPECT_THROW(g(5.0), DomainError);
  EXPECT_THROW(GFunction::from_table({0.0, 1.0}, {1.0, 1.0}), ValidationError);
  EXPECT_THROW(GFunction::from_table({1.0, 0.5}, {0.0, 0.0}), ValidationError);
}

TEST(LogTraceExp, Examples) {
  const DensityOperator half = DensityOperator::maximally_mixed(2);
  EXPECT_NEAR(log_trace_exp(half, HermitianOperator::zero(2)), 0.0, 1e-15);
  EXPECT_NEAR(log_trace_exp(half, HermitianOperator::diagonal(Vec{kLn2, 0.0})), std::log(1.5),
              1e-15);
  EXPECT_NEAR(log_trace_exp(half, HermitianOperator::zero(2), 2.0), -2.0 * kLn2, 1e-15);
}

TEST(LogTraceExp, CommutingReducesToClassical) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const Vec m = random_simplex(d, rng);
    Vec q(d);
    for (double& x : q) x = 2.0 * rng.normal();
    const double classical =
        game::log_partition(game::ClassicalDistribution(m), q);
    EXPECT_NEAR(log_trace_exp(diag(m), HermitianOperator::diagonal(q)), classical, 1e-12);
  }
}

// min over unit v of mu ln((1/mu) <v|e^Q|v>) by normalized gradient descent.
double minimax_descent_oracle(const HermitianOperator& q, double mu, Rng& rng) {
  const CMatrix e = oracle::taylor_exp(q.matrix());
  const std::size_t d = q.dim();
  std::vector<cplx> v(d);
  for (cplx& z : v) z = rng.complex_normal();
  double lmax = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) lmax += std::norm(e.data()[i]);
  const double step = 0.5 / std::sqrt(lmax);
  auto normalize = [&] {
    double n = 0.0;
    for (const cplx& z : v) n += std::norm(z);
    for (cplx& z : v) z /= std::sqrt(n);
  };
  normalize();
  double rq = 0.0;
  for (int t = 0; t < 20000; ++t) {
    std::vector<cplx> ev(d);
    rq = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) ev[i] += e(i, j) * v[j];
      rq += (std::conj(v[i]) * ev[i]).real();
    }
    for (std::size_t i = 0; i < d; ++i) v[i] -= step * (ev[i] - rq * v[i]);
    normalize();
  }
  return mu * (std::log(rq) - std::log(mu));
}

TEST(QuantumMinimax, ExamplesAndDescentOracle) {
  const HermitianOperator q = HermitianOperator::diagonal(Vec{0.3, 1.0});
  const QuantumMinimax a = quantum_minimax_estimate(q);
  EXPECT_NEAR(a.value, 0.3, 1e-15);
  EXPECT_NEAR(a.m_star.matrix()(0, 0).real(), 1.0, 1e-15);
  EXPECT_NEAR(quantum_minimax_estimate(q, 2.0).value, 2.0 * (0.3 - kLn2), 1e-14);
  const QuantumMinimax z = quantum_minimax_estimate(HermitianOperator::zero(2));
  EXPECT_EQ(z.value, 0.0);
  EXPECT_NEAR(z.m_star.matrix()(0, 0).real(), 1.0, 1e-15);

  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const HermitianOperator h = random_hermitian(2 + rng.index(3), 1.0, rng);
    const double mu = rng.uniform(0.5, 2.0);
    const double v = quantum_minimax_estimate(h, mu).value;
    EXPECT_NEAR(v, minimax_descent_oracle(h, mu, rng), 1e-8);
    EXPECT_NEAR(v, mu * (eig_hermitian(h).eigenvalues.front() - std::log(mu)), 1e-12);
  }
}

TEST(Variational, StationaryAtEquality) {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    const DensityOperator rho = random_density(2 + rng.index(3), rng);
    const EntropyResult r = variational_relent(rho, rho, DivergenceSpec::variational());
    EXPECT_NEAR(r.value.value(), 0.0, 1e-7);
    ASSERT_TRUE(r.maximizer.has_value());
    EXPECT_LE(r.maximizer->matrix().frobenius_norm(), 1e-6);
  }
}

TEST(Variational, CommutingMatchesClassical) {
  const double expected = 0.75 * std::log(1.5) + 0.25 * std::log(0.5);
  EXPECT_NEAR(relent(DivergenceSpec::variational(), diag({0.75, 0.25}),
                     DensityOperator::maximally_mixed(2))
                  .value(),
              expected, 1e-5);
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const CommutingPair c = commuting_pair(2 + rng.index(3), rng);
    const EntropyResult r = variational_relent(c.rho, c.sigma, DivergenceSpec::variational());
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.value.value(), oracle::classical_relent(c.p, c.m), 1e-5);
  }
}

TEST(Variational, GradientMatchesFiniteDifferences) {
  Rng rng(9);
  const double h = 1e-5;
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator m = random_density(d, rng);
    const HermitianOperator q = random_hermitian(d, 1.0, rng);
    const CMatrix g = variational_gradient(rho.matrix(), m.matrix(), 1.0, q).matrix();
    for (int k = 0; k < 3; ++k) {
      const HermitianOperator e = random_hermitian(d, 1.0, rng);
      auto f = [&](double t) {
        return variational_objective(rho.matrix(), m.matrix(), 1.0,
                                     HermitianOperator(q.matrix() + e.matrix() * cplx(t)));
      };
      const double fd = (f(h) - f(-h)) / (2.0 * h);
      const double an = trace_product(g, e.matrix()).real();
      EXPECT_LE(std::abs(fd - an), 1e-5 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(Variational, ObjectiveMatchesTaylorOracle) {
  Rng rng(10);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator m = random_density(d, rng);
    const HermitianOperator q = random_hermitian(d, 1.0, rng);
    EXPECT_NEAR(variational_objective(rho.matrix(), m.matrix(), 1.0, q),
                oracle_objective(rho, m, q), 1e-12);
  }
}

TEST(Variational, GaugeInvariance) {
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator m = random_density(d, rng);
    const HermitianOperator q = random_hermitian(d, 1.0, rng);
    const double base = variational_objective(rho.matrix(), m.matrix(), 1.0, q);
    for (double c : {-5.0, -1.0, 1.0, 5.0}) {
      const HermitianOperator shifted(q.matrix() + CMatrix::identity(d) * cplx(c));
      EXPECT_NEAR(variational_objective(rho.matrix(), m.matrix(), 1.0, shifted), base, 1e-13);
    }
  }
}

TEST(Variational, HistoryIsNonDecreasing) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const EntropyResult r = variational_relent(random_density(d, rng), random_density(d, rng),
                                               DivergenceSpec::variational());
    ASSERT_FALSE(r.history.empty());
    for (std::size_t k = 1; k < r.history.size(); ++k) {
      EXPECT_GE(r.history[k], r.history[k - 1]);
    }
    EXPECT_NEAR(r.history.back(), r.value.value(), 1e-12);
  }
}

TEST(Variational, GridOracleOnQubitPair) {
  Rng rng(13);
  const DensityOperator rho = random_density(2, rng);
  const DensityOperator m = random_density(2, rng);
  const EntropyResult r = variational_relent(rho, m, DivergenceSpec::variational());
  ASSERT_TRUE(r.converged);
  const double grid = oracle::coordinate_search_max(
      [&](const std::array<double, 4>& p) {
        return oracle_objective(rho, m, oracle::pauli_combo(p));
      },
      6.0, 24);
  EXPECT_NEAR(r.value.value(), grid, 1e-4);
  EXPECT_LE(r.value.value(), umegaki(rho, m).value() + 1e-7);
}

TEST(Variational, BoundedByUmegaki) {
  Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator m = random_density(d, rng);
    EXPECT_LE(relent(DivergenceSpec::variational(), rho, m).value(),
              umegaki(rho, m).value() + 1e-7);
  }
}

TEST(Variational, RejectsMassMismatch) {
  const DensityOperator rho = DensityOperator::maximally_mixed(2);
  EXPECT_THROW(variational_relent(rho, rho, DivergenceSpec::variational(2.0)), ValidationError);
  OptimOptions bad;
  bad.max_iters = 0;
  EXPECT_THROW(variational_relent(rho, rho, DivergenceSpec::variational(1.0, bad)),
               ValidationError);
}

TEST(Scaling, Examples) {
  Rng rng(15);
  const DensityOperator rho = random_density(2, rng);
  const DensityOperator m = random_density(2, rng);
  const ScalingCheck one = scaling_check(rho, m, 1.0);
  EXPECT_EQ(one.lhs, one.rhs);

  const CommutingPair c = commuting_pair(3, rng, 2.0);
  const ScalingCheck two = scaling_check(c.rho, c.sigma, 2.0);
  const double classical = oracle::classical_relent(c.p, c.m);
  EXPECT_NEAR(two.lhs, classical, 1e-5);
  EXPECT_NEAR(two.rhs, classical, 1e-5);

  const ScalingCheck half = scaling_check(rho.scaled(0.5), m, 0.5);
  EXPECT_TRUE(half.converged);
  EXPECT_LE(std::abs(half.lhs - half.rhs), 1e-5);
}

TEST(Dispatch, SpecExamples) {
  Rng rng(16);
  const DensityOperator rho = random_density(3, rng);
  const DensityOperator sigma = random_density(3, rng);
  EXPECT_NEAR(relent(DivergenceSpec::umegaki(), rho, rho).value(), 0.0, 1e-12);
  EXPECT_GE(relent(DivergenceSpec::bs(), rho, sigma).value(),
            relent(DivergenceSpec::umegaki(), rho, sigma).value() - 1e-9);
  EXPECT_EQ(parse_kind("bs"), DivergenceKind::kBs);
  EXPECT_STREQ(to_string(DivergenceKind::kVariational), "variational");
  EXPECT_THROW(parse_kind("holevo"), ValidationError);
  DivergenceSpec no_ref;
  no_ref.kind = DivergenceKind::kGamma;
  EXPECT_THROW(relent(no_ref, rho, sigma), ValidationError);
}

TEST(Properties, NonnegativityAllKinds) {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator sigma = random_density(d, rng);
    for (DivergenceKind k : kMonotoneKinds) EXPECT_GE(value(spec_for(k), rho, sigma), -1e-9);
    EXPECT_GE(gamma_relent(rho, sigma, sigma).value(), -1e-9);
    EXPECT_GE(gamma_relent(rho, sigma, DensityOperator::maximally_mixed(d)).value(), -1e-9);
    if (i < 20) {
      for (DivergenceKind k : kMonotoneKinds) EXPECT_NEAR(value(spec_for(k), rho, rho), 0.0, 1e-7);
    }
  }
}

TEST(Properties, CommutingCollapseAllKinds) {
  Rng rng(18);
  for (int i = 0; i < 30; ++i) {
    const CommutingPair c = commuting_pair(2 + rng.index(3), rng);
    const double classical = oracle::classical_relent(c.p, c.m);
    for (DivergenceKind k : kMonotoneKinds) {
      EXPECT_NEAR(value(spec_for(k), c.rho, c.sigma), classical, 1e-5) << to_string(k);
    }
    const DensityOperator eye = DensityOperator::unnormalized(CMatrix::identity(c.p.size()));
    EXPECT_NEAR(value(DivergenceSpec::gamma(eye), c.rho, c.sigma), classical, 1e-5);
  }
}

TEST(Properties, JointConvexity) {
  Rng rng(19);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator r1 = random_density(d, rng), r2 = random_density(d, rng);
    const DensityOperator s1 = random_density(d, rng), s2 = random_density(d, rng);
    for (double lam : {0.25, 0.5}) {
      const DensityOperator rm(r1.matrix() * cplx(lam) + r2.matrix() * cplx(1 - lam));
      const DensityOperator sm(s1.matrix() * cplx(lam) + s2.matrix() * cplx(1 - lam));
      for (DivergenceKind k : kMonotoneKinds) {
        const DivergenceSpec s = spec_for(k);
        EXPECT_LE(value(s, rm, sm), lam * value(s, r1, s1) + (1 - lam) * value(s, r2, s2) + 1e-6)
            << to_string(k);
      }
    }
  }
}

TEST(Properties, ProjectionInequality) {
  Rng rng(20);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator sigma = random_density(d, rng);
    std::vector<cplx> v(d);
    for (cplx& z : v) z = rng.complex_normal();
    const CMatrix p = DensityOperator::pure(v).matrix();
    const CMatrix q = CMatrix::identity(d) - p;
    auto compress = [](const CMatrix& proj, const DensityOperator& x) {
      return DensityOperator::unnormalized(sandwich(proj, x.matrix()));
    };
    for (DivergenceKind k : kMonotoneKinds) {
      const DivergenceSpec s = support_spec(k);
      const double lhs = value(s, compress(p, rho), compress(p, sigma)) +
                         value(s, compress(q, rho), compress(q, sigma));
      EXPECT_LE(lhs, value(s, rho, sigma) + 1e-6) << to_string(k);
    }
  }
}

TEST(Properties, PinchingMonotoneAndBlockAdditive) {
  Rng rng(21);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator sigma = random_density(d, rng);
    const CMatrix u = random_unitary(d, rng);
    // Split the columns of u into two or more nonempty blocks.
    const std::size_t cut = 1 + rng.index(d - 1);
    std::vector<CMatrix> projections;
    for (auto [lo, hi] : {std::pair<std::size_t, std::size_t>{0, cut}, {cut, d}}) {
      CMatrix proj(d, d);
      for (std::size_t c = lo; c < hi; ++c)
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) proj(a, b) += u(a, c) * std::conj(u(b, c));
      projections.push_back(proj);
    }
    const QuantumChannel pin = channels::pinching(projections);
    const DensityOperator prho = channels::apply(pin, rho);
    const DensityOperator psigma = channels::apply(pin, sigma);
    for (DivergenceKind k : kMonotoneKinds) {
      const DivergenceSpec s = support_spec(k);
      const double pinched = value(s, prho, psigma);
      EXPECT_LE(pinched, value(s, rho, sigma) + 1e-6) << to_string(k);
      double blocks = 0.0;
      for (const CMatrix& pr : projections) {
        blocks += value(s, DensityOperator::unnormalized(sandwich(pr, rho.matrix())),
                        DensityOperator::unnormalized(sandwich(pr, sigma.matrix())));
      }
      EXPECT_NEAR(pinched, blocks, 1e-8) << to_string(k);
    }
  }
}

TEST(Properties, CptpMonotonicity) {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    const std::size_t d = 2 + rng.index(3);
    const DensityOperator rho = random_density(d, rng);
    const DensityOperator sigma = random_density(d, rng);
    const QuantumChannel ch = random_channel(d, d, 3, rng);
    const DensityOperator a = channels::apply(ch, rho);
    const DensityOperator b = channels::apply(ch, sigma);
    for (DivergenceKind k : kMonotoneKinds) {
      const DivergenceSpec s = spec_for(k);
      EXPECT_LE(value(s, a, b), value(s, rho, sigma) + 1e-6) << to_string(k);
    }
  }
}

}  // namespace
}  // namespace entropy_duel::entropy

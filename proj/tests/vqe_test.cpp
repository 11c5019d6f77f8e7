// Copyright 2026 The lgt-thermal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "lgt/errors.hpp"
#include "lgt/vqe.hpp"

namespace lgt {
namespace {

SearchBounds box(int n, double lo, double hi) {
  return {RVec::Constant(n, lo), RVec::Constant(n, hi)};
}

TEST(Search, ConvexQuadraticConverges) {
  RVec target(3);
  target << 0.3, -1.2, 0.75;
  auto f = [&](const RVec& x) { return (x - target).squaredNorm(); };
  const SearchResult r =
      mesh_direct_search(f, RVec::Zero(3), box(3, -3, 3), {2000, 1.0, 1e-4});
  EXPECT_TRUE(r.converged);
  EXPECT_LT((r.best - target).norm(), 1e-3);
  EXPECT_EQ(r.trace.size(), static_cast<std::size_t>(r.evals));
  for (std::size_t k = 1; k < r.best_trace.size(); ++k)
    EXPECT_LE(r.best_trace[k], r.best_trace[k - 1]);
}

TEST(Search, ConstantCostShrinksToTermination) {
  RVec init(2);
  init << 0.5, -0.5;
  const SearchResult r = mesh_direct_search([](const RVec&) { return 1.0; }, init,
                                            box(2, -3, 3), {1000, 1.0, 0.01});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.best, init);
  EXPECT_LT(r.final_mesh, 0.01);
  // 7 halvings from 1 to below 0.01, each a full poll of 4 directions.
  EXPECT_EQ(r.evals, 1 + 7 * 4);
}

TEST(Search, BudgetIsRespected) {
  auto f = [](const RVec& x) { return x.squaredNorm(); };
  const SearchResult r =
      mesh_direct_search(f, RVec::Constant(4, 2.0), box(4, -3, 3), {15, 0.1, 1e-6});
  EXPECT_EQ(r.evals, 15);
  EXPECT_FALSE(r.converged);
}

TEST(Search, RejectsBadOptions) {
  auto f = [](const RVec&) { return 0.0; };
  EXPECT_THROW(mesh_direct_search(f, RVec::Zero(2), box(2, -1, 1), {10, 0.01, 0.1}),
               std::invalid_argument);
  EXPECT_THROW(mesh_direct_search(f, RVec::Zero(2), box(3, -1, 1), {10, 1, 0.1}),
               std::invalid_argument);
}

TEST(Estimator, RatioFromCounts) {
  const std::vector<long> counts = {30, 0, 10, 60};
  RVec k(4), chi(4);
  k << 1.0, 0.5, 0.0, -0.5;
  chi << 2.0, 0.0, 1.0, -1.0;
  // Denominator 0.3 - 0.3 = 0.
  EXPECT_THROW(projected_chiral_from_counts(counts, k, chi), UnstableEstimateError);
  const std::vector<long> ok = {70, 0, 10, 20};
  EXPECT_NEAR(projected_chiral_from_counts(ok, k, chi), (1.4 + 0.1) / (0.7 - 0.1), 1e-14);
}

TEST(Estimator, ShotEnergyIsUnbiased) {
  const QubitHamiltonian h = build_hamiltonian({Group::SU2, 2, 0.5, 1.0, 1.5});
  const EnergyEstimator est = make_energy_estimator(h);
  RVec th(4), phi(6);
  th << 1.0, 0.4, 2.0, 1.3;
  phi << 0.3, 1.0, -0.5, 0.2, 0.9, -0.4;
  const Mat rho = ansatz_density_matrix(Group::SU2, th, phi).rho;
  std::mt19937_64 rng(31);
  const double exact = estimate_energy(rho, est, 0, rng);
  EXPECT_NEAR(exact, expectation(rho, h.full), 1e-12);
  double sum = 0, sq = 0;
  const int reps = 400;
  for (int k = 0; k < reps; ++k) {
    const double e = estimate_energy(rho, est, 2000, rng);
    sum += e;
    sq += e * e;
  }
  const double mean = sum / reps;
  const double sem = std::sqrt((sq / reps - mean * mean) / reps);
  EXPECT_LT(std::abs(mean - exact), 5 * sem + 1e-12);
}

TEST(Cost, ExactCostIsFreeEnergy) {
  VqeConfig cfg = VqeConfig::defaults(Group::SU2);
  cfg.shots = 0;
  cfg.mu = 0.75;
  const FreeEnergyCost cost(cfg);
  const RVec x = default_initial_point(Group::SU2) + RVec::Constant(10, 0.1);
  std::mt19937_64 rng(1);
  const RVec th = cost.theta_of(x);
  const Mat rho = ansatz_density_matrix(Group::SU2, th, cost.phi_of(x)).rho;
  const double f = expectation(rho, cost.hamiltonian().full) - cfg.T * ancilla_entropy(th);
  EXPECT_NEAR(cost(x, rng), f, 1e-12);
  EXPECT_NEAR(cost.exact(x), f, 1e-12);
}

TEST(Vqe, ExactRunRespectsGibbsBoundAndIsDeterministic) {
  VqeConfig cfg = VqeConfig::defaults(Group::SU2);
  cfg.shots = 0;
  cfg.mu = 2.5;
  cfg.max_evals = 120;
  const VqeResult a = run_vqe(cfg);
  const VqeResult b = run_vqe(cfg);
  EXPECT_EQ(a.free_energy_trace, b.free_energy_trace);
  EXPECT_GE(a.exact_free_energy, a.gibbs_free_energy - 1e-9);
  EXPECT_LE(a.evals_used, 120);
  EXPECT_EQ(a.chi0_estimates.size(), 10u);
  EXPECT_NEAR(a.chi0_std, 0.0, 1e-12);
}

TEST(Vqe, ConfigValidation) {
  VqeConfig cfg;
  cfg.mesh_final = 2.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = VqeConfig{};
  cfg.T = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_EQ(VqeConfig::defaults(Group::SU3).max_evals, 350);
  EXPECT_EQ(VqeConfig::defaults(Group::SU3).shots, 3000);
}

TEST(Ensemble, SeedsAndQuartiles) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  const BoxSummary b = summarize(0.5, {4, 1, 3, 2, 5});
  EXPECT_DOUBLE_EQ(b.median, 3);
  EXPECT_DOUBLE_EQ(b.q1, 2);
  EXPECT_DOUBLE_EQ(b.q3, 4);
  EXPECT_DOUBLE_EQ(summarize(0, {1, 2, 3, 4}).median, 2.5);
  EXPECT_THROW(summarize(0, {}), std::invalid_argument);
}

}  // namespace
}  // namespace lgt

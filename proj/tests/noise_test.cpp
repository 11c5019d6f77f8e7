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

#include "lgt/noise.hpp"

namespace lgt {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Noise, StrengthFidelityRoundTrip) {
  EXPECT_NEAR(depolarizing_strength(0.98), 2.0 / 75, 1e-15);
  EXPECT_NEAR(depolarizing_average_fidelity(depolarizing_strength(0.9)), 0.9, 1e-15);
  EXPECT_THROW(depolarizing_strength(0.1), std::invalid_argument);
}

// Haar-average fidelity of the channel by Monte Carlo.
TEST(Noise, AverageFidelityMatchesHaarEstimate) {
  const double p = depolarizing_strength(0.98);
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n;
  double total = 0;
  const int samples = 4000;
  for (int k = 0; k < samples; ++k) {
    Vec psi(4);
    for (auto& a : psi) a = cplx(n(rng), n(rng));
    psi.normalize();
    Mat rho = psi * psi.adjoint();
    apply_depolarizing(rho, 2, 0, 1, p);
    total += (psi.adjoint() * rho * psi)(0, 0).real();
  }
  EXPECT_NEAR(total / samples, 0.98, 2e-3);
}

TEST(Noise, DepolarizingActsLocally) {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> n;
  Mat a(8, 8);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cplx(n(rng), n(rng));
  Mat rho = a * a.adjoint();
  rho /= rho.trace();
  Mat out = rho;
  apply_depolarizing(out, 3, 0, 2, 1.0);
  EXPECT_NEAR(out.trace().real(), 1.0, 1e-13);
  EXPECT_LT((out - out.adjoint()).norm(), 1e-13);
  // Full strength leaves I/4 on qubits 0 and 2 times the reduced state of 1.
  const double r1 = (rho(0, 0) + rho(1, 1) + rho(4, 4) + rho(5, 5)).real();
  EXPECT_NEAR(out(0, 0).real(), r1 / 4, 1e-13);
  EXPECT_NEAR(std::abs(out(0, 1)), 0.0, 1e-13);
}

TEST(Noise, PerturbAnglesStatistics) {
  std::mt19937_64 rng(25);
  RVec th(2);
  th << 0.0, 2.0;
  double sum = 0, sq = 0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const RVec t = perturb_angles(th, 0.03, rng);
    EXPECT_EQ(t(0), 0.0);
    sum += t(1);
    sq += t(1) * t(1);
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 2.0, 2e-3);
  EXPECT_NEAR(std::sqrt(sq / n - mean * mean), 0.06, 3e-3);
}

TEST(Noise, NoNoiseReproducesIdealState) {
  std::mt19937_64 rng(27);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (Group g : {Group::SU2, Group::SU3}) {
    RVec th(theta_count(g)), phi(phi_count(g));
    for (auto& v : th) v = std::abs(u(rng));
    for (auto& v : phi) v = u(rng);
    const NoisyState s = apply_noise(g, th, phi, NoiseModel::none(), rng);
    EXPECT_LT((s.state.rho - ansatz_density_matrix(g, th, phi).rho).cwiseAbs().maxCoeff(),
              1e-14);
    EXPECT_EQ(s.theta_used, th);
  }
}

TEST(Noise, DefaultNoiseKeepsValidState) {
  std::mt19937_64 rng(29);
  RVec th = RVec::Constant(4, 1.0), phi = RVec::Constant(6, 0.7);
  const NoisyState s = apply_noise(Group::SU2, th, phi, NoiseModel::paper(), rng);
  EXPECT_NEAR(s.state.rho.trace().real(), 1.0, 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat> es(s.state.rho);
  EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
  EXPECT_NE(s.theta_used, th);
  // Depolarizing mixes the state, so it is no longer unitarily related.
  const Mat ideal = ansatz_density_matrix(Group::SU2, s.theta_used, phi).rho;
  EXPECT_GT((s.state.rho - ideal).norm(), 1e-4);
}

}  // namespace
}  // namespace lgt

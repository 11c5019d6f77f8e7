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

// Variational free-energy minimization: shot-sampled estimators, the cost
// F = Tr(rho H) - T S(theta), a coordinate mesh search and full runs.

#ifndef LGT_VQE_HPP
#define LGT_VQE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lgt/clifford.hpp"
#include "lgt/noise.hpp"

namespace lgt {

struct VqeConfig {
  Group group = Group::SU2;
  double T = 0.5;
  double mu = 0.0;
  double m = 0.5;
  double x = 1.0;
  int shots = 2000;  // per measurement basis; 0 selects exact expectations
  int max_evals = 230;
  double mesh_init = 1.0;
  double mesh_final = 0.01;
  NoiseModel noise = NoiseModel::none();
  std::uint64_t seed = 1;
  int chi0_repeats = 10;

  static VqeConfig defaults(Group g);
  bool exact() const { return shots == 0; }
  ModelParams model() const { return {group, 2, m, x, mu}; }
  void validate() const;
};

/// Diagonals needed to turn two Z-basis histograms into an energy: one of
/// rho for the diagonal terms, one of C rho C^dagger for the hopping family.
struct EnergyEstimator {
  RVec diag_terms;     // diagonal of h_diag
  RVec rotated_terms;  // diagonal of C h_offdiag C^dagger
  MeasurementCircuit measurement;
};

EnergyEstimator make_energy_estimator(const QubitHamiltonian& h);

/// Computational-basis populations of rho, clipped at zero.
RVec populations(const Mat& rho);
/// Multinomial histogram of `shots` draws.
std::vector<long> sample_counts(const RVec& probabilities, int shots,
                                std::mt19937_64& rng);

/// Sum of both family estimates; exact when shots == 0.
double estimate_energy(const Mat& rho, const EnergyEstimator& est, int shots,
                       std::mt19937_64& rng);

/// [sum_j f_j (chi K)_jj] / [sum_j f_j K_jj] from one histogram. Throws
/// UnstableEstimateError when |denominator| < 10 / total shots.
double projected_chiral_from_counts(const std::vector<long>& counts,
                                    const RVec& kernel_diag,
                                    const RVec& chi_diag);

/// Everything a cost evaluation needs, built once per configuration.
class FreeEnergyCost {
 public:
  explicit FreeEnergyCost(const VqeConfig& cfg);

  /// x = (theta, phi). Fresh noise and shot draws on every call.
  double operator()(const RVec& x, std::mt19937_64& rng) const;
  /// Noiseless exact F at x.
  double exact(const RVec& x) const;
  /// One shot-based (or exact) projected-chiral measurement at x.
  double chi0_sample(const RVec& x, std::mt19937_64& rng) const;
  /// Exact projected chiral condensate of the ideal state at x.
  double chi0_exact(const RVec& x) const;

  const VqeConfig& config() const { return cfg_; }
  const QubitHamiltonian& hamiltonian() const { return h_; }
  int dimension() const { return theta_count(cfg_.group) + phi_count(cfg_.group); }
  RVec theta_of(const RVec& x) const;
  RVec phi_of(const RVec& x) const;

 private:
  Mat state(const RVec& x, std::mt19937_64& rng, RVec* theta_used) const;

  VqeConfig cfg_;
  QubitHamiltonian h_;
  EnergyEstimator est_;
  RVec kernel_;
  RVec chi_;
};

/// Lower and upper bounds: theta in [0, pi], phi in [-pi, pi].
struct SearchBounds {
  RVec lower;
  RVec upper;
};
SearchBounds ansatz_bounds(Group g);

struct SearchOptions {
  int max_evals = 230;
  double mesh_init = 1.0;
  double mesh_final = 0.01;
  bool expand = false;  // double the mesh after a success
};

struct SearchResult {
  RVec best;
  double best_cost = 0.0;
  std::vector<double> trace;       // every evaluation
  std::vector<double> best_trace;  // best-so-far after each evaluation
  int evals = 0;
  bool converged = false;          // stopped on mesh size
  double final_mesh = 0.0;
};

/// Coordinate poll at +mesh then -mesh for each coordinate in order, the
/// last successful direction polled first. The first improvement is
/// accepted, and with `expand` the mesh doubles (capped at mesh_init); a
/// failed poll halves it. Stops below mesh_final or at max_evals.
SearchResult mesh_direct_search(const std::function<double(const RVec&)>& cost,
                                const RVec& init, const SearchBounds& bounds,
                                const SearchOptions& opt);

struct VqeResult {
  VqeConfig config;
  RVec theta;
  RVec phi;
  std::vector<double> free_energy_trace;
  std::vector<double> best_trace;
  double best_cost = 0.0;
  double exact_free_energy = 0.0;  // noiseless exact F at the optimum
  double gibbs_free_energy = 0.0;  // -T ln Z
  double chi0_ed = 0.0;
  std::vector<double> chi0_estimates;
  double chi0_mean = 0.0;
  double chi0_std = 0.0;
  bool converged = false;
  int evals_used = 0;
};

/// Cold start: theta_i = pi/2, the Z layer at +pi/2, -pi/2, ... and every
/// other phi at 0. With the Z layer at zero the two block layers merge into
/// one rotation and the search stalls on that ridge.
RVec default_initial_point(Group g);

VqeResult run_vqe(const VqeConfig& cfg);
VqeResult run_vqe(const VqeConfig& cfg, const RVec& init);

/// Runs the mu values in the given order, each starting from the previous
/// optimum. Point k uses seed derive_seed(cfg.seed, k).
std::vector<VqeResult> run_vqe_chain(const VqeConfig& cfg,
                                     const std::vector<double>& mus);

/// splitmix64 of (master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct BoxSummary {
  double mu = 0.0;
  std::vector<double> values;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr() const { return q3 - q1; }
};

/// Quartiles by linear interpolation between order statistics.
BoxSummary summarize(double mu, std::vector<double> values);

/// `trials` independent warm-start chains (trial t uses seed
/// derive_seed(cfg.seed, 1000 + t)); one box per mu, in input order.
std::vector<BoxSummary> run_ensemble(const VqeConfig& cfg,
                                     const std::vector<double>& mus,
                                     int trials, int jobs,
                                     std::vector<std::vector<VqeResult>>* runs =
                                         nullptr);

}  // namespace lgt

#endif  // LGT_VQE_HPP

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

// Exact-diagonalization reference: Gibbs states, free energies, the
// singlet-restricted spectrum and (T, mu) sweeps of the projected chiral
// condensate.

#ifndef LGT_THERMAL_HPP
#define LGT_THERMAL_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lgt/singlet.hpp"

namespace lgt {

inline constexpr int kMaxEdQubits = 12;

enum class Regime { Finite, ZeroTemperature, InfiniteTemperature, NotThermal };

struct EigenCache {
  RVec values;  // ascending
  Mat vectors;  // columns
};

struct ThermalState {
  Mat rho;
  double temperature = 0.0;
  Regime regime = Regime::NotThermal;
  EigenCache eigen;  // of the source Hamiltonian, or of rho for ansatz states
};

EigenCache diagonalize(const PauliSum& h);
/// Block diagonalization in fixed-magnetization sectors; valid because
/// every lattice Hamiltonian conserves the total sigma^z.
EigenCache diagonalize_by_magnetization(const PauliSum& h);

/// Normalized e^{-E/T} with a ground-energy shift.
RVec boltzmann_factors(const RVec& energies, double T);

ThermalState gibbs_state(const EigenCache& eigen, double T);
ThermalState gibbs_state(const QubitHamiltonian& h, double T);
/// Uniform mixture over the ground space (|E - E0| < tol).
ThermalState zero_temperature_limit(const EigenCache& eigen,
                                    double degeneracy_tol = 1e-9);
ThermalState infinite_temperature_limit(int n_qubits);

double von_neumann_entropy(const Mat& rho);
/// Tr(rho H) - T S(rho).
double free_energy(const Mat& rho, const PauliSum& h, double T);
/// -T ln Z, the free energy of the Gibbs state.
double gibbs_free_energy(const EigenCache& eigen, double T);

// Singlet sector ------------------------------------------------------------

/// Names of the physical-state classes used in weight tables.
inline const std::array<std::string, 7> kLevelLabels = {
    "vacuum",     "baryon",            "antibaryon", "meson",
    "tetraquark", "baryon_antibaryon", "other"};

/// Heuristic label from the dominant basis component of a level.
std::string classify_level(const ModelParams& p, std::uint64_t dominant_basis);

struct SingletLevel {
  double energy = 0.0;
  double baryon_number = 0.0;
  std::uint64_t dominant_basis = 0;
  std::string label;
  Vec vector;
};

/// Eigenpairs of H restricted to the singlet subspace, each with a definite
/// baryon number, sorted by energy.
std::vector<SingletLevel> singlet_spectrum(const QubitHamiltonian& h,
                                           const ChargeSet& charges);

struct LevelWeight {
  std::string label;
  double energy = 0.0;
  double baryon_number = 0.0;
  int multiplicity = 0;
  double weight = 0.0;
};

/// Boltzmann weights over singlet levels; levels with equal label and
/// |dE| < 1e-9 are merged. Sorted by descending weight.
std::vector<LevelWeight> boltzmann_weights_singlet(const QubitHamiltonian& h,
                                                   const ChargeSet& charges,
                                                   double T);
/// Same weights from mu = 0 levels shifted by -mu B.
std::vector<LevelWeight> weights_from_levels(
    const std::vector<SingletLevel>& levels_mu0, double mu, double T);

// Phase diagram -------------------------------------------------------------

struct PhaseRecord {
  double T = 0.0;
  double mu = 0.0;
  double chi0 = 0.0;
  double z0_over_z = 0.0;
  double energy0 = 0.0;  // lowest singlet energy at this mu
  std::map<std::string, double> weights;
};

struct PhaseTable {
  Group group = Group::SU2;
  int n_sites = 2;
  double mass = 0.5;
  double coupling_x = 1.0;
  std::vector<double> T_grid;
  std::vector<double> mu_grid;
  std::vector<PhaseRecord> records;  // T-major order
};

/// Diagonalizes H(mu = 0) once; every (T, mu) point then costs O(2^n).
class PhaseEvaluator {
 public:
  PhaseEvaluator(Group g, int n_sites, double mass, double coupling_x,
                 const HaarQuadrature& quad = {});
  PhaseRecord evaluate(double T, double mu) const;
  const std::vector<SingletLevel>& singlet_levels() const { return levels_; }

 private:
  RVec energies_;      // full spectrum at mu = 0
  RVec baryon_;        // baryon number per eigenvector
  RVec chi_k_;         // <n| chi K |n>
  RVec k_;             // <n| K |n>
  std::vector<SingletLevel> levels_;
};

PhaseTable phase_sweep(Group g, int n_sites, double mass, double coupling_x,
                       const std::vector<double>& T_grid,
                       const std::vector<double>& mu_grid, int jobs = 1);

void write_phase_csv(std::ostream& os, const PhaseTable& table);

/// Runs fn(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

}  // namespace lgt

#endif  // LGT_THERMAL_HPP

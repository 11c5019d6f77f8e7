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

// Noise channels for the ansatz: Gaussian over-rotation of the sideband
// angles and two-qubit depolarizing noise after every MS gate.

#ifndef LGT_NOISE_HPP
#define LGT_NOISE_HPP

#include <random>

#include "lgt/circuit.hpp"

namespace lgt {

struct NoiseModel {
  double overrotation_frac = 0.03;
  double ms_fidelity = 0.98;
  bool overrotation = true;
  bool depolarizing = true;
  /// Over-rotation of the system register angles; off by default.
  bool system_overrotation = false;

  static NoiseModel paper() { return {}; }
  static NoiseModel none() { return {0.0, 1.0, false, false, false}; }
  bool enabled() const {
    return (overrotation || system_overrotation) || depolarizing;
  }
  void validate() const;
};

/// Strength p of D_p(rho) = (1 - p) rho + p (I/4) (x) Tr_ab(rho) with the
/// given average gate fidelity. For two qubits F_avg = 1 - 3p/4.
double depolarizing_strength(double average_fidelity);
double depolarizing_average_fidelity(double p);

/// In-place two-qubit depolarizing channel on qubits (a, b).
void apply_depolarizing(Mat& rho, int n_qubits, int a, int b, double p);

/// Draws theta_i' ~ N(theta_i, frac |theta_i|).
RVec perturb_angles(const RVec& theta, double frac, std::mt19937_64& rng);

/// Runs a native circuit on rho, depolarizing after each MS gate.
Mat run_noisy_circuit(const Mat& rho, const Circuit& native, double p);

struct NoisyState {
  ThermalState state;
  RVec theta_used;
  RVec phi_used;
};

/// Noisy ansatz state. The transpiled reduced circuit A' M B' acts on the
/// diagonal mixture, then the diagonal frame D is applied exactly; with all
/// channels off this equals ansatz_density_matrix.
NoisyState apply_noise(Group g, const RVec& theta, const RVec& phi,
                       const NoiseModel& noise, std::mt19937_64& rng);

}  // namespace lgt

#endif  // LGT_NOISE_HPP

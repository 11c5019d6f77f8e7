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

// Gate-level circuits for the mixed-state ansatz. Every gate is an exact
// product of Pauli rotations exp(-i a P / 2) up to a global phase, which is
// how circuits are simulated, conjugated and transpiled.

#ifndef LGT_CIRCUIT_HPP
#define LGT_CIRCUIT_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lgt/thermal.hpp"

namespace lgt {

enum class GateKind {
  RX, RY, RZ, RZZ, RYZX, RYZZX, PAULI, CNOT, CZ, H, S, SDG, MS
};

std::string gate_name(GateKind k);
GateKind parse_gate_kind(const std::string& name);

struct Gate {
  GateKind kind = GateKind::RZ;
  std::vector<int> qubits;
  double angle = 0.0;
  std::string axes;  // PAULI only: one letter per listed qubit
  int slot = -1;     // variational parameter index, -1 if fixed

  bool is_rotation() const;
  /// Throws std::invalid_argument on bad arity, repeated or out-of-range
  /// qubits.
  void validate(int n_qubits) const;
};

/// exp(-i angle P / 2).
struct PauliRotation {
  PauliString generator;
  double angle = 0.0;
};

/// Letters of a rotation gate's generator, one per listed qubit.
std::string rotation_axes(const Gate& g);

/// Rotations, in application order, whose product equals the gate up to a
/// global phase.
std::vector<PauliRotation> to_rotations(const Gate& g, int n_qubits);

struct Circuit {
  int n_system_qubits = 0;
  int n_ancillae = 0;
  std::vector<Gate> gates;
  int parameter_slots = 0;

  int n_qubits() const { return n_system_qubits + n_ancillae; }
  int ms_gate_count() const;
  std::map<std::string, int> census() const;
  Circuit& add(Gate g);
  /// Appends the gates of `o`, which must have the same width.
  Circuit& append(const Circuit& o);
  void validate() const;
};

// Ansatz construction -------------------------------------------------------

int theta_count(Group g);
int phi_count(Group g);

/// Qubit pairs (a, b) that the diagonal frame maps each block generator to,
/// as Y_a X_b. They are also the pairs of the hopping family.
std::vector<std::array<int, 2>> frame_pairs(Group g);

/// RX(theta_i) on ancilla i, then CNOT(ancilla i -> system i).
Circuit ancilla_circuit(Group g, const RVec& theta);
/// U_S(phi) from multi-body block rotations, the ZZ layer (SU(3) only) and
/// the Z layer.
Circuit system_circuit(Group g, const RVec& phi);
/// Ancilla preparation followed by U_S.
Circuit build_ansatz(Group g, const RVec& theta, const RVec& phi);

/// Diagonal CZ frame D with D = D^dagger that turns every block generator
/// into a two-body string Y_a X_b.
Circuit diagonal_frame(Group g);
/// U_S written as D A' M B' D with two-body rotations in A', B'.
Circuit template_system_circuit(Group g, const RVec& phi);
/// A' M B': equals D U_S D, hence U_S on diagonal input up to the final D.
Circuit reduced_system_circuit(Group g, const RVec& phi);
/// D followed by exp(-i pi/4 Y_a X_b) on every frame pair; diagonalizes the
/// hopping family.
Circuit template_measurement_circuit(Group g);
/// Only the exp(-i pi/4 Y_a X_b) layer.
Circuit reduced_measurement_circuit(Group g);

// Simulation ----------------------------------------------------------------

/// m <- R m for a single rotation.
void apply_rotation(Mat& m, const PauliRotation& r);
/// m <- U m for the whole circuit.
void apply_circuit(Mat& m, const Circuit& c);
/// Dense unitary, exact up to a global phase.
Mat circuit_unitary(const Circuit& c);
/// U rho U^dagger.
Mat conjugate_state(const Mat& rho, const Circuit& c);

/// p_j = prod_i p_{j_i}(theta_i), p_0 = cos^2(theta/2), over 2^n bitstrings.
RVec product_probabilities(const RVec& theta);
/// Analytic entropy of the product distribution.
double ancilla_entropy(const RVec& theta);

/// rho = U_S diag(p) U_S^dagger without simulating the ancillae. The eigen
/// cache holds p (ascending) and the matching columns of U_S.
ThermalState ansatz_density_matrix(Group g, const RVec& theta,
                                   const RVec& phi);

}  // namespace lgt

#endif  // LGT_CIRCUIT_HPP

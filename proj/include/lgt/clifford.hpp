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

// Pauli conjugation through Clifford circuits and synthesis of circuits that
// diagonalize a commuting family.

#ifndef LGT_CLIFFORD_HPP
#define LGT_CLIFFORD_HPP

#include <vector>

#include "lgt/circuit.hpp"

namespace lgt {

/// R P R^dagger. Throws std::invalid_argument unless the angle is a
/// multiple of pi/2 or the generator commutes with P.
PauliString conjugate(const PauliString& p, const PauliRotation& r);
/// U P U^dagger for a Clifford circuit U.
PauliString conjugate(const PauliString& p, const Circuit& c);

struct MeasurementCircuit {
  Circuit circuit;
  std::vector<PauliString> family;
  /// C P C^dagger for each family member: diagonal, phase 0 or 2.
  std::vector<PauliString> images;
};

/// +1 or -1 from an image's phase.
int image_sign(const PauliString& image);

/// Symplectic elimination over GF(2): Hadamards on the smallest
/// (lexicographically first) qubit subset that makes the X block full rank,
/// CNOTs to clear non-pivot X columns, S and CZ to clear the Z block, then
/// Hadamards on the pivots. Throws std::invalid_argument if two strings
/// anticommute.
MeasurementCircuit build_measurement_circuit(
    const std::vector<PauliString>& family);

/// Images of `family` under a fixed circuit; throws std::invalid_argument
/// if any image is not diagonal.
MeasurementCircuit measurement_from_circuit(
    const std::vector<PauliString>& family, const Circuit& c);

/// Bare strings of the off-diagonal part, the single commuting family that
/// needs a rotated measurement basis.
std::vector<PauliString> hopping_family(const QubitHamiltonian& h);

}  // namespace lgt

#endif  // LGT_CLIFFORD_HPP

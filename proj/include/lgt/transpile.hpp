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

// Lowering to the trapped-ion native set {RX, RY, RZ, MS}.
//
// Pipeline: cancel self-inverse Clifford pairs that meet through commuting
// gates, rewrite everything as Pauli rotations, merge equal generators,
// lower weight-w rotations with 2(w - 2) + 1 MS gates, merge again.

#ifndef LGT_TRANSPILE_HPP
#define LGT_TRANSPILE_HPP

#include <vector>

#include "lgt/circuit.hpp"

namespace lgt {

/// Removes CZ, CNOT and H pairs separated only by gates they commute with.
Circuit cancel_clifford_pairs(const Circuit& c);

/// Commutation-aware merge of rotations about the same generator; drops
/// rotations that reduce to a multiple of 2 pi.
std::vector<PauliRotation> merge_rotations(
    const std::vector<PauliRotation>& rotations);

/// Equivalent sequence of single-qubit rotations and XX rotations.
std::vector<PauliRotation> lower_rotation(const PauliRotation& r);

/// Output gates are RX, RY, RZ and MS only; equal to the input up to a
/// global phase.
Circuit transpile_to_native(const Circuit& c);

}  // namespace lgt

#endif  // LGT_TRANSPILE_HPP

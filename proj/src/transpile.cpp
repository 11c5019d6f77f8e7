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

#include "lgt/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lgt/clifford.hpp"

namespace lgt {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

bool self_inverse(GateKind k) {
  return k == GateKind::CZ || k == GateKind::CNOT || k == GateKind::H;
}

bool same_gate(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == GateKind::CZ) {
    auto qa = a.qubits, qb = b.qubits;
    std::sort(qa.begin(), qa.end());
    std::sort(qb.begin(), qb.end());
    return qa == qb;
  }
  return a.qubits == b.qubits;
}

bool gates_commute(const Gate& a, const Gate& b, int n) {
  for (const auto& ra : to_rotations(a, n))
    for (const auto& rb : to_rotations(b, n))
      if (!pauli_commutes(ra.generator, rb.generator)) return false;
  return true;
}

double wrap(double a) { return std::remainder(a, 2 * kPi); }

PauliRotation normalized(PauliRotation r) {
  if (r.generator.phase == 2) {
    r.generator.phase = 0;
    r.angle = -r.angle;
  } else if (r.generator.phase != 0) {
    throw std::invalid_argument("rotation generator must be Hermitian");
  }
  return r;
}

PauliRotation single(int n, int q, char axis, double angle) {
  return {PauliString::single(n, q, axis), angle};
}

// Clifford rotation on one qubit that maps `letter` to `target`.
PauliRotation local_map(int n, int q, char letter, char target) {
  if (target == 'X') {
    if (letter == 'Y') return single(n, q, 'Z', -kPi / 2);
    if (letter == 'Z') return single(n, q, 'Y', kPi / 2);
  } else {  // target == 'Z'
    if (letter == 'X') return single(n, q, 'Y', -kPi / 2);
    if (letter == 'Y') return single(n, q, 'X', kPi / 2);
  }
  return single(n, q, 'Z', 0.0);
}

std::vector<int> support(const PauliString& p) {
  std::vector<int> s;
  for (int q = 0; q < p.n_qubits; ++q)
    if (p.letter(q) != 'I') s.push_back(q);
  return s;
}

// Conjugates r by the sequence `w` (applied first to last): W r W^dagger.
PauliRotation through(const std::vector<PauliRotation>& w, PauliRotation r) {
  for (const auto& g : w) r.generator = conjugate(r.generator, g);
  return normalized(r);
}

std::vector<PauliRotation> inverse(const std::vector<PauliRotation>& w) {
  std::vector<PauliRotation> out(w.rbegin(), w.rend());
  for (auto& r : out) r.angle = -r.angle;
  return out;
}

}  // namespace

Circuit cancel_clifford_pairs(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  const int n = c.n_qubits();
  for (const Gate& g : c.gates) {
    bool cancelled = false;
    if (self_inverse(g.kind)) {
      for (auto k = out.gates.size(); k-- > 0;) {
        if (same_gate(out.gates[k], g)) {
          out.gates.erase(out.gates.begin() + static_cast<long>(k));
          cancelled = true;
          break;
        }
        if (!gates_commute(out.gates[k], g, n)) break;
      }
    }
    if (!cancelled) out.gates.push_back(g);
  }
  return out;
}

std::vector<PauliRotation> merge_rotations(
    const std::vector<PauliRotation>& rotations) {
  std::vector<PauliRotation> out;
  for (const auto& raw : rotations) {
    PauliRotation r = normalized(raw);
    r.angle = wrap(r.angle);
    if (std::abs(r.angle) < kAngleTol) continue;
    bool merged = false;
    for (auto k = out.size(); k-- > 0;) {
      if (out[k].generator == r.generator) {
        out[k].angle = wrap(out[k].angle + r.angle);
        if (std::abs(out[k].angle) < kAngleTol)
          out.erase(out.begin() + static_cast<long>(k));
        merged = true;
        break;
      }
      if (!pauli_commutes(out[k].generator, r.generator)) break;
    }
    if (!merged) out.push_back(r);
  }
  return out;
}

std::vector<PauliRotation> lower_rotation(const PauliRotation& raw) {
  const PauliRotation r = normalized(raw);
  const int n = r.generator.n_qubits;
  const std::vector<int> s = support(r.generator);
  if (s.size() <= 1) return {r};

  const int b = s[s.size() - 2], c = s.back();
  std::vector<PauliRotation> w;
  if (s.size() == 2) {
    // Map both letters to X, leaving an XX (MS) rotation.
    w = {local_map(n, b, r.generator.letter(b), 'X'),
         local_map(n, c, r.generator.letter(c), 'X')};
  } else {
    // Map to Z_b X_c, then MS(pi/2) sends Z_b X_c to -Y_b.
    w = {local_map(n, b, r.generator.letter(b), 'Z'),
         local_map(n, c, r.generator.letter(c), 'X'),
         {PauliString::identity(n), 0.0}};
    std::string xx(n, 'I');
    xx[b] = xx[c] = 'X';
    w.back() = {PauliString::from_label(xx), kPi / 2};
  }
  // R_P(a) = W^dagger R_{W P W^dagger}(a) W.
  const PauliRotation inner = through(w, r);
  std::vector<PauliRotation> out = w;
  if (s.size() == 2) {
    out.push_back(inner);
  } else {
    for (const auto& q : lower_rotation(inner)) out.push_back(q);
  }
  for (const auto& q : inverse(w)) out.push_back(q);
  return out;
}

Circuit transpile_to_native(const Circuit& c) {
  c.validate();
  const Circuit reduced = cancel_clifford_pairs(c);
  const int n = c.n_qubits();
  std::vector<PauliRotation> ir;
  for (const auto& g : reduced.gates)
    for (const auto& r : to_rotations(g, n)) ir.push_back(r);
  ir = merge_rotations(ir);
  std::vector<PauliRotation> native;
  for (const auto& r : ir)
    for (const auto& q : lower_rotation(r)) native.push_back(q);
  native = merge_rotations(native);

  Circuit out;
  out.n_system_qubits = c.n_system_qubits;
  out.n_ancillae = c.n_ancillae;
  out.parameter_slots = c.parameter_slots;
  for (const auto& r : native) {
    const std::vector<int> s = support(r.generator);
    if (s.size() == 1) {
      const char a = r.generator.letter(s[0]);
      const GateKind k =
          a == 'X' ? GateKind::RX : (a == 'Y' ? GateKind::RY : GateKind::RZ);
      out.add({k, s, r.angle});
    } else if (s.size() == 2 && r.generator.letter(s[0]) == 'X' &&
               r.generator.letter(s[1]) == 'X') {
      out.add({GateKind::MS, s, r.angle});
    } else {
      throw std::logic_error("lowering left a non-native rotation");
    }
  }
  return out;
}

}  // namespace lgt

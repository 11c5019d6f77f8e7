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

#include "lgt/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lgt/clifford.hpp"
#include "lgt/errors.hpp"

namespace lgt {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;  // -1: given by the axes string
};

constexpr KindInfo kKinds[] = {
    {GateKind::RX, "RX", 1},       {GateKind::RY, "RY", 1},
    {GateKind::RZ, "RZ", 1},       {GateKind::RZZ, "RZZ", 2},
    {GateKind::RYZX, "RYZX", 3},   {GateKind::RYZZX, "RYZZX", 4},
    {GateKind::PAULI, "PAULI", -1}, {GateKind::CNOT, "CNOT", 2},
    {GateKind::CZ, "CZ", 2},       {GateKind::H, "H", 1},
    {GateKind::S, "S", 1},         {GateKind::SDG, "SDG", 1},
    {GateKind::MS, "MS", 2},
};

const KindInfo& info(GateKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw std::invalid_argument("unknown gate kind");
}

PauliString on_qubits(int n, const std::vector<int>& qubits,
                      const std::string& letters) {
  std::string s(n, 'I');
  for (std::size_t k = 0; k < qubits.size(); ++k) s[qubits[k]] = letters[k];
  return PauliString::from_label(s);
}

void check_counts(Group g, const RVec* theta, const RVec* phi) {
  if (theta && theta->size() != theta_count(g))
    throw std::invalid_argument("expected " + std::to_string(theta_count(g)) +
                                " ancilla angles, got " +
                                std::to_string(theta->size()));
  if (phi && phi->size() != phi_count(g))
    throw std::invalid_argument("expected " + std::to_string(phi_count(g)) +
                                " system angles, got " +
                                std::to_string(phi->size()));
}

Circuit empty_system(Group g) {
  Circuit c;
  c.n_system_qubits = num_colors(g) * 2;
  return c;
}

// Replaces each multi-body block by its image under the frame D.
Circuit framed_blocks(Group g, const RVec& phi) {
  const Circuit d = diagonal_frame(g);
  Circuit out = empty_system(g);
  out.parameter_slots = phi_count(g);
  for (const Gate& gate : system_circuit(g, phi).gates) {
    if (gate.kind != GateKind::RYZX && gate.kind != GateKind::RYZZX) {
      out.add(gate);
      continue;
    }
    const int n = out.n_qubits();
    const PauliString img =
        conjugate(on_qubits(n, gate.qubits, rotation_axes(gate)), d);
    Gate r{GateKind::PAULI, {}, img.phase == 2 ? -gate.angle : gate.angle, "",
           gate.slot};
    for (int q = 0; q < n; ++q)
      if (img.letter(q) != 'I') {
        r.qubits.push_back(q);
        r.axes.push_back(img.letter(q));
      }
    out.add(r);
  }
  return out;
}

}  // namespace

std::string gate_name(GateKind k) { return info(k).name; }

GateKind parse_gate_kind(const std::string& name) {
  for (const auto& i : kKinds)
    if (name == i.name) return i.kind;
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

bool Gate::is_rotation() const {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::H:
    case GateKind::S:
    case GateKind::SDG:
      return false;
    default:
      return true;
  }
}

void Gate::validate(int n_qubits) const {
  const int arity = info(kind).arity;
  if (kind == GateKind::PAULI) {
    if (axes.size() != qubits.size() || axes.empty())
      throw std::invalid_argument("PAULI gate needs one axis per qubit");
    if (axes.find_first_not_of("XYZ") != std::string::npos)
      throw std::invalid_argument("PAULI axes must be X, Y or Z");
  } else if (static_cast<int>(qubits.size()) != arity) {
    throw std::invalid_argument(gate_name(kind) + " expects " +
                                std::to_string(arity) + " qubits");
  }
  std::set<int> seen;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits)
      throw std::invalid_argument("qubit index out of range");
    if (!seen.insert(q).second)
      throw std::invalid_argument("repeated qubit in " + gate_name(kind));
  }
  if (!std::isfinite(angle)) throw std::invalid_argument("non-finite angle");
}

std::string rotation_axes(const Gate& g) {
  switch (g.kind) {
    case GateKind::RX: return "X";
    case GateKind::RY: return "Y";
    case GateKind::RZ: return "Z";
    case GateKind::RZZ: return "ZZ";
    case GateKind::RYZX: return "YZX";
    case GateKind::RYZZX: return "YZZX";
    case GateKind::MS: return "XX";
    case GateKind::PAULI: return g.axes;
    default:
      throw std::invalid_argument(gate_name(g.kind) + " is not a rotation");
  }
}

std::vector<PauliRotation> to_rotations(const Gate& g, int n) {
  g.validate(n);
  const auto& q = g.qubits;
  auto rot = [&](std::vector<int> qs, const std::string& ax, double a) {
    return PauliRotation{on_qubits(n, qs, ax), a};
  };
  switch (g.kind) {
    case GateKind::CNOT:
      return {rot({q[0]}, "Z", kHalfPi), rot({q[1]}, "X", kHalfPi),
              rot(q, "ZX", -kHalfPi)};
    case GateKind::CZ:
      return {rot({q[0]}, "Z", kHalfPi), rot({q[1]}, "Z", kHalfPi),
              rot(q, "ZZ", -kHalfPi)};
    case GateKind::H:
      return {rot(q, "Z", 2 * kHalfPi), rot(q, "Y", kHalfPi)};
    case GateKind::S:
      return {rot(q, "Z", kHalfPi)};
    case GateKind::SDG:
      return {rot(q, "Z", -kHalfPi)};
    default:
      return {rot(q, rotation_axes(g), g.angle)};
  }
}

int Circuit::ms_gate_count() const {
  return static_cast<int>(std::count_if(gates.begin(), gates.end(), [](auto& g) {
    return g.kind == GateKind::MS;
  }));
}

std::map<std::string, int> Circuit::census() const {
  std::map<std::string, int> c;
  for (const auto& g : gates) ++c[gate_name(g.kind)];
  return c;
}

Circuit& Circuit::add(Gate g) {
  g.validate(n_qubits());
  gates.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& o) {
  if (o.n_qubits() != n_qubits())
    throw std::invalid_argument("circuit width mismatch");
  gates.insert(gates.end(), o.gates.begin(), o.gates.end());
  return *this;
}

void Circuit::validate() const {
  if (n_system_qubits < 1 || n_ancillae < 0)
    throw std::invalid_argument("bad register sizes");
  for (const auto& g : gates) g.validate(n_qubits());
}

// ---------------------------------------------------------------------------

int theta_count(Group g) { return 2 * num_colors(g); }
int phi_count(Group g) { return g == Group::SU2 ? 6 : 15; }

std::vector<std::array<int, 2>> frame_pairs(Group g) {
  if (g == Group::SU2) return {{0, 2}, {1, 3}};
  return {{0, 3}, {1, 4}, {2, 5}};
}

Circuit ancilla_circuit(Group g, const RVec& theta) {
  check_counts(g, &theta, nullptr);
  Circuit c = empty_system(g);
  const int n = c.n_system_qubits;
  c.n_ancillae = n;
  c.parameter_slots = n;
  for (int i = 0; i < n; ++i) c.add({GateKind::RX, {n + i}, theta(i), "", i});
  for (int i = 0; i < n; ++i) c.add({GateKind::CNOT, {n + i, i}});
  return c;
}

Circuit system_circuit(Group g, const RVec& phi) {
  check_counts(g, nullptr, &phi);
  Circuit c = empty_system(g);
  const int n = c.n_system_qubits;
  c.parameter_slots = phi_count(g);
  if (g == Group::SU2) {
    for (int b = 0; b < 2; ++b)
      c.add({GateKind::RYZX, {b, b + 1, b + 2}, phi(0), "", 0});
    for (int q = 0; q < n; ++q) c.add({GateKind::RZ, {q}, phi(1 + q), "", 1 + q});
    for (int b = 0; b < 2; ++b)
      c.add({GateKind::RYZX, {b, b + 1, b + 2}, phi(5), "", 5});
    return c;
  }
  for (int b = 0; b < 3; ++b)
    c.add({GateKind::RYZZX, {b, b + 1, b + 2, b + 3}, phi(b), "", b});
  const int zz[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int k = 0; k < 3; ++k)
    c.add({GateKind::RZZ, {zz[k][0], zz[k][1]}, phi(3 + k), "", 3 + k});
  for (int q = 0; q < n; ++q) c.add({GateKind::RZ, {q}, phi(6 + q), "", 6 + q});
  for (int b = 0; b < 3; ++b)
    c.add({GateKind::RYZZX, {b, b + 1, b + 2, b + 3}, phi(12 + b), "", 12 + b});
  return c;
}

Circuit build_ansatz(Group g, const RVec& theta, const RVec& phi) {
  Circuit c = ancilla_circuit(g, theta);
  const int shift = theta_count(g);
  c.parameter_slots = shift + phi_count(g);
  for (Gate gate : system_circuit(g, phi).gates) {
    gate.slot += shift;
    c.add(gate);
  }
  return c;
}

Circuit diagonal_frame(Group g) {
  Circuit c = empty_system(g);
  if (g == Group::SU2) {
    c.add({GateKind::CZ, {1, 2}});
  } else {
    c.add({GateKind::CZ, {1, 3}});
    c.add({GateKind::CZ, {2, 3}});
    c.add({GateKind::CZ, {2, 4}});
  }
  return c;
}

Circuit template_system_circuit(Group g, const RVec& phi) {
  const Circuit d = diagonal_frame(g);
  Circuit c = d;
  c.parameter_slots = phi_count(g);
  c.append(framed_blocks(g, phi));
  c.append(d);
  return c;
}

Circuit reduced_system_circuit(Group g, const RVec& phi) {
  return framed_blocks(g, phi);
}

Circuit reduced_measurement_circuit(Group g) {
  Circuit c = empty_system(g);
  for (const auto& [a, b] : frame_pairs(g))
    c.add({GateKind::PAULI, {a, b}, kHalfPi, "YX"});
  return c;
}

Circuit template_measurement_circuit(Group g) {
  Circuit c = diagonal_frame(g);
  c.append(reduced_measurement_circuit(g));
  return c;
}

// ---------------------------------------------------------------------------

void apply_rotation(Mat& m, const PauliRotation& r) {
  const PauliString& p = r.generator;
  if (p.phase % 2 != 0)
    throw std::invalid_argument("rotation generator must be Hermitian");
  const std::uint64_t dim = std::uint64_t{1} << p.n_qubits;
  if (static_cast<std::uint64_t>(m.rows()) != dim)
    throw std::invalid_argument("state dimension does not match rotation");
  const double c = std::cos(r.angle / 2), s = std::sin(r.angle / 2);
  Mat pm(m.rows(), m.cols());
  for (std::uint64_t col = 0; col < dim; ++col) {
    std::uint64_t row;
    cplx amp;
    p.apply(col, &row, &amp);
    pm.row(row) = amp * m.row(col);
  }
  m = c * m - kI * s * pm;
}

void apply_circuit(Mat& m, const Circuit& c) {
  for (const auto& g : c.gates)
    for (const auto& r : to_rotations(g, c.n_qubits())) apply_rotation(m, r);
}

Mat circuit_unitary(const Circuit& c) {
  if (c.n_qubits() > kDefaultDenseCap)
    throw ResourceError("circuit too wide for a dense unitary");
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Mat u = Mat::Identity(dim, dim);
  apply_circuit(u, c);
  return u;
}

Mat conjugate_state(const Mat& rho, const Circuit& c) {
  Mat m = rho;
  apply_circuit(m, c);
  m.adjointInPlace();
  apply_circuit(m, c);
  m.adjointInPlace();
  return m;
}

RVec product_probabilities(const RVec& theta) {
  const int n = static_cast<int>(theta.size());
  if (n < 1 || n > kMaxEdQubits)
    throw std::invalid_argument("ancilla count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  RVec p = RVec::Ones(dim);
  for (int i = 0; i < n; ++i) {
    const double c2 = std::pow(std::cos(theta(i) / 2), 2);
    const Eigen::Index bit = Eigen::Index{1} << (n - 1 - i);
    for (Eigen::Index j = 0; j < dim; ++j) p(j) *= (j & bit) ? 1 - c2 : c2;
  }
  return p;
}

double ancilla_entropy(const RVec& theta) {
  double s = 0;
  for (Eigen::Index i = 0; i < theta.size(); ++i)
    s += binary_entropy(std::pow(std::cos(theta(i) / 2), 2));
  return s;
}

ThermalState ansatz_density_matrix(Group g, const RVec& theta,
                                   const RVec& phi) {
  check_counts(g, &theta, &phi);
  const Mat u = circuit_unitary(system_circuit(g, phi));
  const RVec p = product_probabilities(theta);
  std::vector<Eigen::Index> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto a, auto b) { return p(a) < p(b); });
  ThermalState s;
  s.eigen.values.resize(p.size());
  s.eigen.vectors.resize(u.rows(), u.cols());
  for (std::size_t k = 0; k < order.size(); ++k) {
    s.eigen.values(k) = p(order[k]);
    s.eigen.vectors.col(k) = u.col(order[k]);
  }
  s.rho = u * p.asDiagonal() * u.adjoint();
  s.regime = Regime::NotThermal;
  return s;
}

}  // namespace lgt

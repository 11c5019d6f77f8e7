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

#include "lgt/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lgt {
namespace {

// One symplectic row: x bits then z bits, qubit order.
using Row = std::vector<std::uint8_t>;

struct Tableau {
  int n = 0;
  std::vector<Row> rows;

  std::uint8_t& x(std::size_t r, int q) { return rows[r][q]; }
  std::uint8_t& z(std::size_t r, int q) { return rows[r][n + q]; }

  void hadamard(int q) {
    for (auto& r : rows) std::swap(r[q], r[n + q]);
  }
  void phase(int q) {
    for (auto& r : rows) r[n + q] ^= r[q];
  }
  void cnot(int c, int t) {
    for (auto& r : rows) {
      r[t] ^= r[c];
      r[n + c] ^= r[n + t];
    }
  }
  void cz(int a, int b) {
    for (auto& r : rows) {
      r[n + b] ^= r[a];
      r[n + a] ^= r[b];
    }
  }
};

Row to_row(const PauliString& p) {
  Row r(2 * p.n_qubits, 0);
  for (int q = 0; q < p.n_qubits; ++q) {
    const Mask b = qubit_bit(p.n_qubits, q);
    r[q] = (p.x & b) ? 1 : 0;
    r[p.n_qubits + q] = (p.z & b) ? 1 : 0;
  }
  return r;
}

// Row-reduces `rows` restricted to columns [lo, hi); returns pivot columns.
std::vector<int> reduce(std::vector<Row>& rows, int lo, int hi) {
  std::vector<int> pivots;
  std::size_t top = 0;
  for (int c = lo; c < hi && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r][c])
        for (std::size_t k = 0; k < rows[r].size(); ++k)
          rows[r][k] ^= rows[top][k];
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

int x_rank(std::vector<Row> rows, int n) {
  return static_cast<int>(reduce(rows, 0, n).size());
}

// Lexicographically first subset of the given size, then the next one.
bool next_combination(std::vector<int>& s, int n) {
  const int k = static_cast<int>(s.size());
  int i = k - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

PauliString conjugate(const PauliString& p, const PauliRotation& r) {
  if (pauli_commutes(p, r.generator)) return p;
  const double quarter = r.angle / (std::numbers::pi / 2);
  const double k = std::round(quarter);
  if (std::abs(quarter - k) > 1e-12)
    throw std::invalid_argument("rotation angle is not a Clifford angle");
  const int turns = ((static_cast<long>(k) % 4) + 4) % 4;
  PauliString out = p;
  switch (turns) {
    case 0: break;
    case 2: out.phase = (out.phase + 2) % 4; break;
    default: {
      // cos(a) P - i sin(a) Q P with sin(a) = +1 or -1.
      out = pauli_mul(r.generator, p);
      out.phase = (out.phase + (turns == 1 ? 3 : 1)) % 4;
    }
  }
  return out;
}

PauliString conjugate(const PauliString& p, const Circuit& c) {
  PauliString out = p;
  for (const auto& g : c.gates)
    for (const auto& r : to_rotations(g, c.n_qubits())) out = conjugate(out, r);
  return out;
}

int image_sign(const PauliString& image) {
  if (image.phase == 0) return 1;
  if (image.phase == 2) return -1;
  throw std::invalid_argument("image is not Hermitian");
}

MeasurementCircuit measurement_from_circuit(
    const std::vector<PauliString>& family, const Circuit& c) {
  MeasurementCircuit m{c, family, {}};
  for (const auto& p : family) {
    PauliString img = conjugate(p, c);
    if (!img.is_diagonal())
      throw std::invalid_argument("circuit does not diagonalize " +
                                  p.to_string());
    image_sign(img);
    m.images.push_back(img);
  }
  return m;
}

MeasurementCircuit build_measurement_circuit(
    const std::vector<PauliString>& family) {
  if (family.empty()) throw std::invalid_argument("empty Pauli family");
  const int n = family.front().n_qubits;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].n_qubits != n)
      throw std::invalid_argument("family members differ in size");
    for (std::size_t j = 0; j < i; ++j)
      if (!pauli_commutes(family[i], family[j]))
        throw std::invalid_argument("family is not commuting: " +
                                    family[i].to_string() + " vs " +
                                    family[j].to_string());
  }

  if (std::all_of(family.begin(), family.end(),
                  [](const PauliString& p) { return p.is_diagonal(); })) {
    Circuit none;
    none.n_system_qubits = n;
    return measurement_from_circuit(family, none);
  }

  Tableau t{n, {}};
  for (const auto& p : family) t.rows.push_back(to_row(p));
  const auto rank = reduce(t.rows, 0, 2 * n).size();
  t.rows.resize(rank);

  Circuit c;
  c.n_system_qubits = n;

  // Hadamards: smallest subset, then lexicographic order.
  bool found = false;
  for (int size = 0; size <= n && !found; ++size) {
    std::vector<int> s(size);
    for (int i = 0; i < size; ++i) s[i] = i;
    do {
      Tableau trial = t;
      for (int q : s) trial.hadamard(q);
      if (x_rank(trial.rows, n) == static_cast<int>(rank)) {
        for (int q : s) {
          t.hadamard(q);
          c.add({GateKind::H, {q}});
        }
        found = true;
        break;
      }
    } while (next_combination(s, n));
  }
  if (!found) throw std::invalid_argument("family is not isotropic");

  const std::vector<int> pivots = reduce(t.rows, 0, n);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;

  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < n; ++j)
      if (!is_pivot[j] && t.x(i, j)) {
        t.cnot(pivots[i], j);
        c.add({GateKind::CNOT, {pivots[i], j}});
      }
  for (std::size_t i = 0; i < pivots.size(); ++i)
    if (t.z(i, pivots[i])) {
      t.phase(pivots[i]);
      c.add({GateKind::S, {pivots[i]}});
    }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = i + 1; j < pivots.size(); ++j)
      if (t.z(i, pivots[j])) {
        t.cz(pivots[i], pivots[j]);
        c.add({GateKind::CZ, {pivots[i], pivots[j]}});
      }
    for (int k = 0; k < n; ++k)
      if (!is_pivot[k] && t.z(i, k)) {
        t.cz(pivots[i], k);
        c.add({GateKind::CZ, {pivots[i], k}});
      }
  }
  for (int p : pivots) c.add({GateKind::H, {p}});

  return measurement_from_circuit(family, c);
}

std::vector<PauliString> hopping_family(const QubitHamiltonian& h) {
  std::vector<PauliString> f;
  for (const auto& [p, coeff] : h.h_offdiag.term_list()) f.push_back(p);
  return f;
}

}  // namespace lgt

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

// Qubit Hamiltonians of SU(2) and SU(3) lattice gauge theory in one spatial
// dimension with open boundaries, after the gauge fields are integrated out
// and the colored staggered fermions are Jordan-Wigner mapped to qubits.
//
// Site n (1-based, n = 1..N) owns qubits (n-1)*Nc .. n*Nc-1, one per color.
// A qubit in |0> is an occupied fermion mode. Odd sites carry antimatter
// (filled in the bare vacuum), even sites carry matter (empty in the bare
// vacuum); see strong_coupling_vacuum().

#ifndef LGT_MODEL_HPP
#define LGT_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lgt/pauli.hpp"

namespace lgt {

enum class Group { SU2, SU3 };

int num_colors(Group g);
std::string group_name(Group g);
/// Accepts "su2"/"SU2"/"su3"/"SU3".
Group parse_group(const std::string& s);

struct ModelParams {
  Group group = Group::SU2;
  int n_sites = 2;
  double mass = 0.5;
  double coupling_x = 1.0;
  double chem_potential = 0.0;

  int n_qubits() const { return num_colors(group) * n_sites; }
  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

int max_sites(Group g);

struct HamiltonianTerms {
  PauliSum kinetic;
  PauliSum mass;
  PauliSum electric;
  PauliSum chem;  // baryon number
};

struct QubitHamiltonian {
  ModelParams params;
  PauliSum h_diag;     // diagonal family
  PauliSum h_offdiag;  // everything else
  PauliSum full;
};

struct ChargeSet {
  Group group = Group::SU2;
  std::vector<PauliSum> charges;
  std::vector<int> cartan_indices;
};

HamiltonianTerms build_su2_terms(const ModelParams& p);
HamiltonianTerms build_su3_terms(const ModelParams& p);
HamiltonianTerms build_terms(const ModelParams& p);

/// full = kin + m mass + elec / (2x) - mu chem
QubitHamiltonian assemble(const ModelParams& p, const HamiltonianTerms& t);
QubitHamiltonian build_su2_hamiltonian(const ModelParams& p);
QubitHamiltonian build_su3_hamiltonian(const ModelParams& p);
QubitHamiltonian build_hamiltonian(const ModelParams& p);

PauliSum build_chiral(const ModelParams& p);
PauliSum build_baryon_number(const ModelParams& p);

/// Charges of one site (0-based site index), in generator order.
std::vector<PauliSum> site_charges(const ModelParams& p, int site);
ChargeSet build_charges(const ModelParams& p);

/// sum_{k=1}^{N-1} (sum_{m<=k} Q_m)^2 from the site charges.
PauliSum electric_from_charges(const ModelParams& p);

/// Basis index of the strong-coupling vacuum: minimizes the diagonal of
/// H_elec first and H_mass second (lowest index on ties).
std::uint64_t strong_coupling_vacuum(const ModelParams& p);

/// True for matter (even, 1-based) sites.
inline bool is_matter_site(int site) { return (site + 1) % 2 == 0; }

struct Occupation {
  int quarks = 0;      // occupied modes on matter sites
  int antiquarks = 0;  // empty modes on antimatter sites
};
Occupation count_occupation(const ModelParams& p, std::uint64_t basis_index);

}  // namespace lgt

#endif  // LGT_MODEL_HPP

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


#include <gtest/gtest.h>

#include "lgt/model.hpp"

namespace lgt {
namespace {

ModelParams su2(int n, double mu = 0.0) { return {Group::SU2, n, 0.5, 1.0, mu}; }
ModelParams su3(int n, double mu = 0.0) { return {Group::SU3, n, 0.5, 1.0, mu}; }

PauliSum total_z(int n) {
  PauliSum s(n);
  for (int q = 0; q < n; ++q) s += PauliSum::sigma_z(n, q);
  return s;
}

TEST(Model, ParseGroup) {
  EXPECT_EQ(parse_group("su2"), Group::SU2);
  EXPECT_EQ(parse_group("SU3"), Group::SU3);
  EXPECT_THROW(parse_group("su4"), std::invalid_argument);
}

TEST(Model, ValidateRejectsBadParams) {
  EXPECT_THROW((ModelParams{Group::SU2, 1, 0.5, 1.0, 0.0}.validate()),
               std::invalid_argument);
  EXPECT_THROW((ModelParams{Group::SU2, 2, 0.5, 0.0, 0.0}.validate()),
               std::invalid_argument);
}

TEST(Model, HamiltoniansAreHermitianAndConserveMagnetization) {
  for (const ModelParams& p : {su2(2, 0.7), su2(3, 1.1), su2(4), su3(2, 2.0)}) {
    const QubitHamiltonian h = build_hamiltonian(p);
    EXPECT_TRUE(h.full.is_hermitian());
    EXPECT_LT(h.full.distance(h.h_diag + h.h_offdiag), 1e-14);
    EXPECT_TRUE(h.h_diag.is_diagonal());
    PauliSum c = commutator(h.full, total_z(p.n_qubits()));
    c.prune(1e-12);
    EXPECT_TRUE(c.empty()) << group_name(p.group) << " N=" << p.n_sites;
  }
}

TEST(Model, Su2HoppingStrings) {
  const QubitHamiltonian h = build_hamiltonian(su2(2));
  for (const char* s : {"IXZX", "IYZY", "XZXI", "YZYI"})
    EXPECT_NEAR(h.h_offdiag.coefficient(s).real(), -0.25, 1e-15) << s;
  EXPECT_EQ(h.h_offdiag.size(), 4u);
}

TEST(Model, Su3HoppingStrings) {
  const QubitHamiltonian h = build_hamiltonian(su3(2));
  EXPECT_NEAR(h.h_offdiag.coefficient("IIXZZX").real(), -0.25, 1e-15);
  EXPECT_NEAR(h.h_offdiag.coefficient("IXZZXI").real(), 0.25, 1e-15);
  EXPECT_NEAR(h.h_offdiag.coefficient("YZZYII").real(), -0.25, 1e-15);
  EXPECT_EQ(h.h_offdiag.size(), 6u);
}

TEST(Model, ElectricTermEqualsSquaredChargeSums) {
  for (const ModelParams& p : {su2(2), su2(3), su2(4), su3(2)}) {
    const HamiltonianTerms t = build_terms(p);
    EXPECT_LT(t.electric.distance(electric_from_charges(p)), 1e-12);
  }
}

TEST(Model, ChargesCommuteWithHamiltonian) {
  for (const ModelParams& p : {su2(2), su2(3), su3(2)}) {
    const QubitHamiltonian h = build_hamiltonian(p);
    for (const PauliSum& q : build_charges(p).charges) {
      PauliSum c = commutator(h.full, q);
      c.prune(1e-12);
      EXPECT_TRUE(c.empty());
    }
  }
}

TEST(Model, ChemicalPotentialShiftsByBaryonNumber) {
  const QubitHamiltonian a = build_hamiltonian(su3(2, 0.0));
  const QubitHamiltonian b = build_hamiltonian(su3(2, 1.3));
  const PauliSum diff = b.full - a.full;
  EXPECT_LT(diff.distance(-1.3 * build_baryon_number(su3(2))), 1e-14);
}

TEST(Model, StrongCouplingVacuum) {
  EXPECT_EQ(strong_coupling_vacuum(su2(2)), 0b0011u);
  EXPECT_EQ(strong_coupling_vacuum(su3(2)), 0b000111u);
  const Occupation o = count_occupation(su2(2), 0b0011u);
  EXPECT_EQ(o.quarks, 0);
  EXPECT_EQ(o.antiquarks, 0);
  // The vacuum carries zero baryon number.
  EXPECT_NEAR(diagonal_values(build_baryon_number(su3(2)))(0b000111), 0.0, 1e-15);
}

TEST(Model, KineticConventionsAgree) {
  // -1/2 (sigma+ Z sigma- + h.c.) expands to -1/4 (XZX + YZY).
  const int n = 3;
  PauliSum hop = PauliSum::sigma_plus(n, 0) * PauliSum::sigma_z(n, 1) *
                 PauliSum::sigma_minus(n, 2);
  PauliSum a = -0.5 * (hop + hop.adjoint());
  PauliSum b = -0.25 * (PauliSum::from_label("XZX") + PauliSum::from_label("YZY"));
  EXPECT_LT((sum_to_matrix(a) - sum_to_matrix(b)).norm(), 1e-14);
}

}  // namespace
}  // namespace lgt

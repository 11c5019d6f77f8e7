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

// Charge-singlet kernel K = int dmu(U) U restricted to the maximal torus.
// K is diagonal in the computational basis and satisfies
// Tr(Omega K) = Tr_0(Omega) for every gauge-invariant Omega, where Tr_0 is
// the trace over the singlet subspace. K is not a projector.

#ifndef LGT_SINGLET_HPP
#define LGT_SINGLET_HPP

#include "lgt/model.hpp"

namespace lgt {

struct HaarQuadrature {
  int grid_points_per_axis = 201;  // odd, so 0 is a node
  void validate() const;
};

struct SingletKernel {
  Group group = Group::SU2;
  int n_sites = 2;
  RVec diagonal;          // K_cc for every basis state c
  PauliSum pauli_decomp;  // all-Z strings
};

/// Closed-form SU(2) character integral at a Q^z eigenvalue:
/// 1 at q = 0, -1/2 at |q| = 1, 0 at every other half-integer q.
double su2_kernel_value(double qz);

/// (1/2pi) int_0^{4pi} sin^2(eta/2) e^{i eta q} d eta by the periodic
/// trapezoid rule with `points` nodes.
double su2_kernel_quadrature(double qz, int points);

/// SU(3) torus integral at a (Q^3, Q^8) eigenvalue pair.
cplx su3_kernel_value(double q3, double q8, const HaarQuadrature& quad = {});

SingletKernel kernel_su2(int n_sites);
SingletKernel kernel_su3(int n_sites, const HaarQuadrature& quad = {});
SingletKernel build_kernel(const ModelParams& p,
                           const HaarQuadrature& quad = {});

/// Largest entry change of the SU(3) kernel when the grid is refined to
/// 2*points - 1 nodes per axis.
double su3_kernel_refinement_change(int n_sites, const HaarQuadrature& quad);

/// Closed-form Pauli decomposition of K for two sites, written term by term
/// from the known analytic result (1-body terms absent).
PauliSum kernel_closed_form_two_sites(Group g);

/// All-Z decomposition of a diagonal by a Walsh-Hadamard transform.
PauliSum pauli_decompose_diagonal(const RVec& diag);

/// Orthogonal projector onto the common null space of all charges.
/// Throws ResourceError above 12 qubits.
Mat brute_force_singlet_projector(const ChargeSet& charges);

/// Orthonormal basis (columns) of the singlet subspace.
Mat singlet_basis(const ChargeSet& charges);

/// Tr(rho O K) / Tr(rho K). Throws DegenerateStateError if
/// |Tr(rho K)| <= 1e-12.
double restricted_expectation(const Mat& rho, const PauliSum& obs,
                              const SingletKernel& kernel);

/// Diagonal-only version: both traces from diag(rho).
double restricted_expectation_diagonal(const RVec& populations,
                                       const RVec& obs_diag,
                                       const RVec& kernel_diag);

}  // namespace lgt

#endif  // LGT_SINGLET_HPP

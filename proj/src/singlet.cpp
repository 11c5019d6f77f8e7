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

#include "lgt/singlet.hpp"

#include <cmath>
#include <initializer_list>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

constexpr double kPi = std::numbers::pi;

bool near_integer(double v, double tol = 1e-9) {
  return std::abs(v - std::round(v)) < tol;
}

// SU(3) Haar density on the maximal torus.
double su3_weight(double eta, double psi) {
  const double s = std::sin(eta) * std::sin((3 * psi + eta) / 2) *
                   std::sin((3 * psi - eta) / 2);
  return 8.0 / (3.0 * kPi * kPi) * s * s;
}

}  // namespace

void HaarQuadrature::validate() const {
  if (grid_points_per_axis < 3 || grid_points_per_axis % 2 == 0)
    throw std::invalid_argument("Haar grid needs an odd node count >= 3");
}

double su2_kernel_value(double qz) {
  if (!near_integer(2 * qz))
    throw std::invalid_argument("Q^z eigenvalue must be a half-integer");
  if (std::abs(qz) < 1e-9) return 1.0;
  if (std::abs(std::abs(qz) - 1.0) < 1e-9) return -0.5;
  return 0.0;
}

double su2_kernel_quadrature(double qz, int points) {
  if (points < 3) throw std::invalid_argument("need at least 3 nodes");
  const double h = 4 * kPi / (points - 1);
  cplx acc = 0;
  for (int j = 0; j < points; ++j) {
    const double eta = j * h;
    const double w = (j == 0 || j == points - 1) ? 0.5 : 1.0;
    const double s = std::sin(eta / 2);
    acc += w * s * s * std::exp(kI * (eta * qz));
  }
  return (acc * h / (2 * kPi)).real();
}

cplx su3_kernel_value(double q3, double q8, const HaarQuadrature& quad) {
  quad.validate();
  const int m = quad.grid_points_per_axis;
  const double h = 2 * kPi / (m - 1);
  const double a = 2 * q3;
  const double b = 2 * std::sqrt(3.0) * q8;
  std::vector<cplx> ea(m), eb(m);
  std::vector<double> wt(m);
  for (int j = 0; j < m; ++j) {
    const double t = -kPi + j * h;
    ea[j] = std::exp(kI * (a * t));
    eb[j] = std::exp(kI * (b * t));
    wt[j] = (j == 0 || j == m - 1) ? 0.5 : 1.0;
  }
  cplx acc = 0;
  for (int i = 0; i < m; ++i) {
    const double eta = -kPi + i * h;
    cplx row = 0;
    for (int j = 0; j < m; ++j) {
      const double psi = -kPi + j * h;
      row += wt[j] * su3_weight(eta, psi) * eb[j];
    }
    acc += wt[i] * ea[i] * row;
  }
  return acc * h * h;
}

PauliSum pauli_decompose_diagonal(const RVec& diag) {
  const Eigen::Index dim = diag.size();
  if (dim < 1 || (dim & (dim - 1)) != 0)
    throw std::invalid_argument("diagonal length must be a power of two");
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  RVec w = diag;
  for (Eigen::Index len = 1; len < dim; len <<= 1)
    for (Eigen::Index i = 0; i < dim; i += 2 * len)
      for (Eigen::Index j = i; j < i + len; ++j) {
        const double u = w(j), v = w(j + len);
        w(j) = u + v;
        w(j + len) = u - v;
      }
  w /= static_cast<double>(dim);
  PauliSum out(std::max(n, 1));
  if (n == 0) {
    out.add_term(PauliString::identity(1), w(0));
    return out;
  }
  for (Eigen::Index zmask = 0; zmask < dim; ++zmask)
    if (std::abs(w(zmask)) >= kPruneTolerance)
      out.add_term(PauliString{n, 0, static_cast<Mask>(zmask), 0}, w(zmask));
  return out;
}

namespace {

PauliSum zz(int n, std::initializer_list<int> qubits) {
  std::string s(n, 'I');
  for (int q : qubits) s[q] = 'Z';
  return PauliSum::from_label(s);
}

}  // namespace

PauliSum kernel_closed_form_two_sites(Group g) {
  if (g == Group::SU2) {
    PauliSum k = zz(4, {2, 3}) + zz(4, {1, 2}) + zz(4, {0, 3}) + zz(4, {0, 1}) -
                 zz(4, {1, 3}) - zz(4, {0, 2});
    k *= 3.0 / 16.0;
    k += (5.0 / 16.0) * (PauliSum::identity(4) + zz(4, {0, 1, 2, 3}));
    return k;
  }
  const int n = 6;
  PauliSum pairs(n), quads(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pairs += zz(n, {i, j});
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) quads += zz(n, {i, j, k, l});
    }
  PauliSum k = (5.0 / 96.0) * pairs + (1.0 / 96.0) * quads +
               (3.0 / 32.0) * PauliSum::identity(n);
  PauliSum sixth = zz(n, {0, 1, 3, 4}) + zz(n, {0, 2, 3, 5}) +
                   zz(n, {1, 2, 4, 5}) - zz(n, {0, 3}) - zz(n, {1, 4}) -
                   zz(n, {2, 5});
  k += (1.0 / 6.0) * sixth;
  k -= (1.0 / 32.0) * zz(n, {0, 1, 2, 3, 4, 5});
  return k;
}

SingletKernel kernel_su2(int n_sites) {
  ModelParams p{Group::SU2, n_sites, 0.0, 1.0, 0.0};
  p.validate();
  const ChargeSet cs = build_charges(p);
  const RVec qz = diagonal_values(cs.charges[cs.cartan_indices[0]]);
  SingletKernel k;
  k.group = Group::SU2;
  k.n_sites = n_sites;
  k.diagonal.resize(qz.size());
  for (Eigen::Index c = 0; c < qz.size(); ++c)
    k.diagonal(c) = su2_kernel_value(qz(c));
  k.pauli_decomp = pauli_decompose_diagonal(k.diagonal);
  return k;
}

SingletKernel kernel_su3(int n_sites, const HaarQuadrature& quad) {
  ModelParams p{Group::SU3, n_sites, 0.0, 1.0, 0.0};
  p.validate();
  quad.validate();
  const ChargeSet cs = build_charges(p);
  const RVec q3 = diagonal_values(cs.charges[cs.cartan_indices[0]]);
  const RVec q8 = diagonal_values(cs.charges[cs.cartan_indices[1]]);
  std::map<std::pair<long, long>, double> memo;
  SingletKernel k;
  k.group = Group::SU3;
  k.n_sites = n_sites;
  k.diagonal.resize(q3.size());
  for (Eigen::Index c = 0; c < q3.size(); ++c) {
    const double a = 2 * q3(c), b = 2 * std::sqrt(3.0) * q8(c);
    if (!near_integer(a) || !near_integer(b))
      throw NumericError("Cartan eigenvalues off the weight lattice");
    const std::pair<long, long> key{std::lround(a), std::lround(b)};
    auto it = memo.find(key);
    if (it == memo.end()) {
      const cplx v = su3_kernel_value(q3(c), q8(c), quad);
      if (std::abs(v.imag()) > 1e-6)
        throw NumericError("Haar quadrature left an imaginary residue; "
                           "grid too coarse");
      it = memo.emplace(key, v.real()).first;
    }
    k.diagonal(c) = it->second;
  }
  k.pauli_decomp = pauli_decompose_diagonal(k.diagonal);
  return k;
}

SingletKernel build_kernel(const ModelParams& p, const HaarQuadrature& quad) {
  return p.group == Group::SU2 ? kernel_su2(p.n_sites)
                               : kernel_su3(p.n_sites, quad);
}

double su3_kernel_refinement_change(int n_sites, const HaarQuadrature& quad) {
  const SingletKernel a = kernel_su3(n_sites, quad);
  const SingletKernel b =
      kernel_su3(n_sites, HaarQuadrature{2 * quad.grid_points_per_axis - 1});
  return (a.diagonal - b.diagonal).cwiseAbs().maxCoeff();
}

Mat singlet_basis(const ChargeSet& cs) {
  if (cs.charges.empty()) throw std::invalid_argument("empty charge set");
  const int n = cs.charges.front().n_qubits();
  if (n > 12) throw ResourceError("singlet oracle limited to 12 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;

  // Singlets carry zero Cartan charge, and the Casimir preserves Cartan
  // sectors, so only that sector needs diagonalizing.
  std::vector<RVec> cartan;
  for (int idx : cs.cartan_indices)
    cartan.push_back(diagonal_values(cs.charges[idx]));
  std::vector<std::uint64_t> sector;
  std::unordered_map<std::uint64_t, Eigen::Index> where;
  for (std::uint64_t c = 0; c < dim; ++c) {
    bool zero = true;
    for (const auto& d : cartan) zero = zero && std::abs(d(c)) < 1e-9;
    if (zero) {
      where[c] = static_cast<Eigen::Index>(sector.size());
      sector.push_back(c);
    }
  }

  PauliSum casimir(n);
  for (const auto& q : cs.charges) casimir += q * q;
  const Eigen::Index m = static_cast<Eigen::Index>(sector.size());
  Mat block = Mat::Zero(m, m);
  for (const auto& [key, coeff] : casimir.terms()) {
    const PauliString p{n, key.first, key.second, 0};
    for (Eigen::Index j = 0; j < m; ++j) {
      std::uint64_t row;
      cplx amp;
      p.apply(sector[j], &row, &amp);
      auto it = where.find(row);
      if (it != where.end()) block(it->second, j) += coeff * amp;
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(block);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < m; ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-8) null_cols.push_back(i);
  Mat basis = Mat::Zero(dim, static_cast<Eigen::Index>(null_cols.size()));
  for (std::size_t k = 0; k < null_cols.size(); ++k)
    for (Eigen::Index j = 0; j < m; ++j)
      basis(sector[j], k) = es.eigenvectors()(j, null_cols[k]);
  return basis;
}

Mat brute_force_singlet_projector(const ChargeSet& cs) {
  const Mat b = singlet_basis(cs);
  return b * b.adjoint();
}

double restricted_expectation(const Mat& rho, const PauliSum& obs,
                              const SingletKernel& kernel) {
  const int n = obs.n_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (kernel.diagonal.size() != static_cast<Eigen::Index>(dim) ||
      rho.rows() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("dimension mismatch in restricted expectation");
  cplx den = 0;
  for (std::uint64_t c = 0; c < dim; ++c) den += rho(c, c) * kernel.diagonal(c);
  if (std::abs(den) <= 1e-12)
    throw DegenerateStateError("state has no charge-singlet weight");
  cplx num = 0;
  for (const auto& [key, coeff] : obs.terms()) {
    const PauliString p{n, key.first, key.second, 0};
    cplx acc = 0;
    for (std::uint64_t c = 0; c < dim; ++c) {
      std::uint64_t r;
      cplx amp;
      p.apply(c, &r, &amp);
      acc += rho(c, r) * amp * kernel.diagonal(c);
    }
    num += coeff * acc;
  }
  const cplx v = num / den;
  if (std::abs(v.imag()) > 1e-8 * std::max(1.0, std::abs(v.real())))
    throw NumericError("restricted expectation is not real; observable is "
                       "not gauge invariant for this state");
  return v.real();
}

double restricted_expectation_diagonal(const RVec& populations,
                                       const RVec& obs_diag,
                                       const RVec& kernel_diag) {
  const double den = populations.dot(kernel_diag);
  if (std::abs(den) <= 1e-12)
    throw DegenerateStateError("state has no charge-singlet weight");
  return populations.dot(obs_diag.cwiseProduct(kernel_diag)) / den;
}

}  // namespace lgt

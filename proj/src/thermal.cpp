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

#include "lgt/thermal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

void check_ed_size(int n) {
  if (n > kMaxEdQubits)
    throw ResourceError("exact diagonalization limited to " +
                        std::to_string(kMaxEdQubits) + " qubits");
}

void check_temperature(double T) {
  if (!(T > 0) || !std::isfinite(T))
    throw std::invalid_argument(
        "temperature must be positive and finite; use the explicit limit "
        "branches for T = 0 or T = infinity");
}

EigenCache sort_eigen(const RVec& values, const Mat& vectors) {
  std::vector<Eigen::Index> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return values(a) < values(b);
  });
  EigenCache e{RVec(values.size()), Mat(vectors.rows(), vectors.cols())};
  for (std::size_t k = 0; k < order.size(); ++k) {
    e.values(k) = values(order[k]);
    e.vectors.col(k) = vectors.col(order[k]);
  }
  return e;
}

Mat mixture(const EigenCache& e, const RVec& p) {
  return e.vectors * p.asDiagonal() * e.vectors.adjoint();
}

std::uint64_t dominant_component(const Vec& v) {
  Eigen::Index best;
  v.cwiseAbs2().maxCoeff(&best);
  return static_cast<std::uint64_t>(best);
}

}  // namespace

EigenCache diagonalize(const PauliSum& h) {
  check_ed_size(h.n_qubits());
  Eigen::SelfAdjointEigenSolver<Mat> es(sum_to_matrix(h));
  return EigenCache{es.eigenvalues(), es.eigenvectors()};
}

EigenCache diagonalize_by_magnetization(const PauliSum& h) {
  const int n = h.n_qubits();
  check_ed_size(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::vector<std::uint64_t>> sectors(n + 1);
  std::vector<Eigen::Index> pos(dim);
  for (std::uint64_t c = 0; c < dim; ++c) {
    auto& s = sectors[popcount(c)];
    pos[c] = static_cast<Eigen::Index>(s.size());
    s.push_back(c);
  }
  std::vector<Mat> blocks(n + 1);
  for (int w = 0; w <= n; ++w) {
    const auto m = static_cast<Eigen::Index>(sectors[w].size());
    blocks[w] = Mat::Zero(m, m);
  }
  std::unordered_map<std::uint64_t, cplx> leak;
  for (const auto& [key, coeff] : h.terms()) {
    const PauliString p{n, key.first, key.second, 0};
    for (std::uint64_t c = 0; c < dim; ++c) {
      std::uint64_t r;
      cplx amp;
      p.apply(c, &r, &amp);
      if (popcount(r) == popcount(c))
        blocks[popcount(c)](pos[r], pos[c]) += coeff * amp;
      else
        leak[(r << 32) | c] += coeff * amp;
    }
  }
  for (const auto& [k, v] : leak)
    if (std::abs(v) > 1e-10)
      throw NumericError("Hamiltonian does not conserve magnetization");

  RVec values(dim);
  Mat vectors = Mat::Zero(dim, dim);
  Eigen::Index col = 0;
  for (int w = 0; w <= n; ++w) {
    Eigen::SelfAdjointEigenSolver<Mat> es(blocks[w]);
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k, ++col) {
      values(col) = es.eigenvalues()(k);
      for (std::size_t j = 0; j < sectors[w].size(); ++j)
        vectors(sectors[w][j], col) = es.eigenvectors()(j, k);
    }
  }
  return sort_eigen(values, vectors);
}

RVec boltzmann_factors(const RVec& energies, double T) {
  check_temperature(T);
  const double e0 = energies.minCoeff();
  RVec w = (-(energies.array() - e0) / T).exp().matrix();
  return w / w.sum();
}

ThermalState gibbs_state(const EigenCache& eigen, double T) {
  ThermalState s;
  s.rho = mixture(eigen, boltzmann_factors(eigen.values, T));
  s.temperature = T;
  s.regime = Regime::Finite;
  s.eigen = eigen;
  return s;
}

ThermalState gibbs_state(const QubitHamiltonian& h, double T) {
  check_temperature(T);
  return gibbs_state(diagonalize(h.full), T);
}

ThermalState zero_temperature_limit(const EigenCache& eigen,
                                    double degeneracy_tol) {
  RVec p = RVec::Zero(eigen.values.size());
  const double e0 = eigen.values.minCoeff();
  for (Eigen::Index k = 0; k < p.size(); ++k)
    if (eigen.values(k) - e0 < degeneracy_tol) p(k) = 1.0;
  p /= p.sum();
  ThermalState s;
  s.rho = mixture(eigen, p);
  s.temperature = 0.0;
  s.regime = Regime::ZeroTemperature;
  s.eigen = eigen;
  return s;
}

ThermalState infinite_temperature_limit(int n_qubits) {
  check_ed_size(n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ThermalState s;
  s.rho = Mat::Identity(dim, dim) / static_cast<double>(dim);
  s.temperature = std::numeric_limits<double>::infinity();
  s.regime = Regime::InfiniteTemperature;
  return s;
}

double von_neumann_entropy(const Mat& rho) {
  Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
  const RVec p = es.eigenvalues().cwiseMax(0.0);
  return shannon_entropy(p);
}

double free_energy(const Mat& rho, const PauliSum& h, double T) {
  if (T < 0) throw std::invalid_argument("temperature must be >= 0");
  const double e = expectation(rho, h);
  return T == 0 ? e : e - T * von_neumann_entropy(rho);
}

double gibbs_free_energy(const EigenCache& eigen, double T) {
  check_temperature(T);
  const double e0 = eigen.values.minCoeff();
  const double z = (-(eigen.values.array() - e0) / T).exp().sum();
  return e0 - T * std::log(z);
}

// ---------------------------------------------------------------------------

std::string classify_level(const ModelParams& p,
                           std::uint64_t dominant_basis) {
  const Occupation occ = count_occupation(p, dominant_basis);
  if (occ.quarks > occ.antiquarks) return "baryon";
  if (occ.antiquarks > occ.quarks) return "antibaryon";
  const int pairs = occ.quarks;
  if (pairs == 0) return "vacuum";
  if (pairs == 1) return "meson";
  if (p.group == Group::SU3 && pairs == 2) return "tetraquark";
  if (pairs == num_colors(p.group)) return "baryon_antibaryon";
  return "other";
}

std::vector<SingletLevel> singlet_spectrum(const QubitHamiltonian& h,
                                           const ChargeSet& charges) {
  check_ed_size(h.full.n_qubits());
  const Mat s = singlet_basis(charges);
  const PauliSum bop = build_baryon_number(h.params);
  const Mat hs = s.adjoint() * sum_to_matrix(h.full) * s;
  const Mat bs = s.adjoint() * sum_to_matrix(bop) * s;

  // Baryon number commutes with H; split its eigenspaces first so every
  // level carries a definite B even when H(mu) is degenerate across sectors.
  Eigen::SelfAdjointEigenSolver<Mat> eb(bs);
  std::vector<SingletLevel> levels;
  Eigen::Index start = 0;
  const Eigen::Index r = eb.eigenvalues().size();
  while (start < r) {
    Eigen::Index end = start + 1;
    while (end < r &&
           std::abs(eb.eigenvalues()(end) - eb.eigenvalues()(start)) < 1e-9)
      ++end;
    const Mat sub = eb.eigenvectors().middleCols(start, end - start);
    Eigen::SelfAdjointEigenSolver<Mat> eh(sub.adjoint() * hs * sub);
    for (Eigen::Index k = 0; k < eh.eigenvalues().size(); ++k) {
      SingletLevel lv;
      lv.energy = eh.eigenvalues()(k);
      lv.vector = s * (sub * eh.eigenvectors().col(k));
      lv.baryon_number = eb.eigenvalues()(start);
      lv.dominant_basis = dominant_component(lv.vector);
      lv.label = classify_level(h.params, lv.dominant_basis);
      levels.push_back(std::move(lv));
    }
    start = end;
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const auto& a, const auto& b) {
                     return a.energy < b.energy;
                   });
  return levels;
}

namespace {

std::vector<LevelWeight> group_weights(const std::vector<SingletLevel>& levels,
                                       const std::vector<double>& energies,
                                       double T) {
  RVec e(static_cast<Eigen::Index>(energies.size()));
  for (std::size_t k = 0; k < energies.size(); ++k) e(k) = energies[k];
  const RVec w = boltzmann_factors(e, T);
  std::vector<LevelWeight> out;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    auto it = std::find_if(out.begin(), out.end(), [&](const LevelWeight& g) {
      return g.label == levels[k].label &&
             std::abs(g.energy - energies[k]) < 1e-9;
    });
    if (it == out.end()) {
      out.push_back(LevelWeight{levels[k].label, energies[k],
                                levels[k].baryon_number, 1, w(k)});
    } else {
      it->multiplicity += 1;
      it->weight += w(k);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.weight > b.weight;
  });
  return out;
}

}  // namespace

std::vector<LevelWeight> boltzmann_weights_singlet(const QubitHamiltonian& h,
                                                   const ChargeSet& charges,
                                                   double T) {
  const auto levels = singlet_spectrum(h, charges);
  std::vector<double> e;
  for (const auto& lv : levels) e.push_back(lv.energy);
  return group_weights(levels, e, T);
}

std::vector<LevelWeight> weights_from_levels(
    const std::vector<SingletLevel>& levels_mu0, double mu, double T) {
  std::vector<double> e;
  for (const auto& lv : levels_mu0) e.push_back(lv.energy - mu * lv.baryon_number);
  return group_weights(levels_mu0, e, T);
}

// ---------------------------------------------------------------------------

PhaseEvaluator::PhaseEvaluator(Group g, int n_sites, double mass,
                               double coupling_x, const HaarQuadrature& quad) {
  const ModelParams p{g, n_sites, mass, coupling_x, 0.0};
  const QubitHamiltonian h = build_hamiltonian(p);
  const EigenCache e = diagonalize_by_magnetization(h.full);
  const SingletKernel kernel = build_kernel(p, quad);
  const RVec chi = diagonal_values(build_chiral(p));
  const RVec bdiag = diagonal_values(build_baryon_number(p));

  energies_ = e.values;
  const Eigen::Index dim = e.values.size();
  baryon_.resize(dim);
  chi_k_.resize(dim);
  k_.resize(dim);
  const RVec chik = chi.cwiseProduct(kernel.diagonal);
  for (Eigen::Index n = 0; n < dim; ++n) {
    const RVec pop = e.vectors.col(n).cwiseAbs2();
    baryon_(n) = pop.dot(bdiag);
    chi_k_(n) = pop.dot(chik);
    k_(n) = pop.dot(kernel.diagonal);
  }
  levels_ = singlet_spectrum(h, build_charges(p));
}

PhaseRecord PhaseEvaluator::evaluate(double T, double mu) const {
  const RVec e = energies_ - mu * baryon_;
  const RVec w = boltzmann_factors(e, T);
  PhaseRecord r;
  r.T = T;
  r.mu = mu;
  const double den = w.dot(k_);
  if (std::abs(den) <= 1e-12)
    throw DegenerateStateError("Gibbs state lost its singlet weight");
  r.chi0 = w.dot(chi_k_) / den;
  r.z0_over_z = den;

  std::vector<double> es;
  for (const auto& lv : levels_) es.push_back(lv.energy - mu * lv.baryon_number);
  r.energy0 = *std::min_element(es.begin(), es.end());
  for (const auto& label : kLevelLabels) r.weights[label] = 0.0;
  for (const auto& g : group_weights(levels_, es, T)) r.weights[g.label] += g.weight;
  return r;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

PhaseTable phase_sweep(Group g, int n_sites, double mass, double coupling_x,
                       const std::vector<double>& T_grid,
                       const std::vector<double>& mu_grid, int jobs) {
  if (T_grid.empty() || mu_grid.empty())
    throw std::invalid_argument("sweep grids must be non-empty");
  const PhaseEvaluator ev(g, n_sites, mass, coupling_x);
  PhaseTable t{g, n_sites, mass, coupling_x, T_grid, mu_grid, {}};
  const int count = static_cast<int>(T_grid.size() * mu_grid.size());
  t.records.resize(count);
  parallel_for(count, jobs, [&](int i) {
    const std::size_t a = i / mu_grid.size(), b = i % mu_grid.size();
    t.records[i] = ev.evaluate(T_grid[a], mu_grid[b]);
  });
  return t;
}

void write_phase_csv(std::ostream& os, const PhaseTable& t) {
  os << "group,N,m,x,T,mu,chi0,Z0_over_Z,E0_singlet";
  for (const auto& l : kLevelLabels) os << ",w_" << l;
  os << '\n';
  os << std::setprecision(12);
  for (const auto& r : t.records) {
    os << group_name(t.group) << ',' << t.n_sites << ',' << t.mass << ','
       << t.coupling_x << ',' << r.T << ',' << r.mu << ',' << r.chi0 << ','
       << r.z0_over_z << ',' << r.energy0;
    for (const auto& l : kLevelLabels) os << ',' << r.weights.at(l);
    os << '\n';
  }
}

}  // namespace lgt

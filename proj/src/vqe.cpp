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

#include "lgt/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

VqeConfig VqeConfig::defaults(Group g) {
  VqeConfig c;
  c.group = g;
  if (g == Group::SU3) {
    c.shots = 3000;
    c.max_evals = 350;
    c.mesh_init = 0.25;
  }
  return c;
}

void VqeConfig::validate() const {
  model().validate();
  if (!(T >= 0) || !std::isfinite(T))
    throw std::invalid_argument("temperature must be finite and >= 0");
  if (shots < 0) throw std::invalid_argument("shots must be >= 0");
  if (max_evals < 1) throw std::invalid_argument("max_evals must be >= 1");
  if (!(mesh_final > 0 && mesh_final < mesh_init))
    throw std::invalid_argument("need 0 < mesh_final < mesh_init");
  if (chi0_repeats < 1) throw std::invalid_argument("chi0_repeats must be >= 1");
  noise.validate();
}

EnergyEstimator make_energy_estimator(const QubitHamiltonian& h) {
  EnergyEstimator e;
  e.diag_terms = diagonal_values(h.h_diag);
  e.measurement = measurement_from_circuit(
      hopping_family(h), template_measurement_circuit(h.params.group));
  PauliSum rotated(h.full.n_qubits());
  const auto terms = h.h_offdiag.term_list();
  for (std::size_t k = 0; k < terms.size(); ++k)
    rotated.add_term(e.measurement.images[k], terms[k].second);
  e.rotated_terms = diagonal_values(rotated);
  return e;
}

RVec populations(const Mat& rho) {
  return rho.diagonal().real().cwiseMax(0.0);
}

std::vector<long> sample_counts(const RVec& probabilities, int shots,
                                std::mt19937_64& rng) {
  if (shots <= 0) throw std::invalid_argument("shots must be positive");
  std::discrete_distribution<long> dist(
      probabilities.data(), probabilities.data() + probabilities.size());
  std::vector<long> counts(probabilities.size(), 0);
  for (int s = 0; s < shots; ++s) ++counts[dist(rng)];
  return counts;
}

namespace {

double histogram_mean(const std::vector<long>& counts, const RVec& values) {
  double acc = 0;
  long total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    acc += counts[j] * values(j);
    total += counts[j];
  }
  return acc / total;
}

}  // namespace

double estimate_energy(const Mat& rho, const EnergyEstimator& est, int shots,
                       std::mt19937_64& rng) {
  const RVec p1 = populations(rho);
  const RVec p2 = populations(conjugate_state(rho, est.measurement.circuit));
  if (shots == 0) return p1.dot(est.diag_terms) + p2.dot(est.rotated_terms);
  return histogram_mean(sample_counts(p1, shots, rng), est.diag_terms) +
         histogram_mean(sample_counts(p2, shots, rng), est.rotated_terms);
}

double projected_chiral_from_counts(const std::vector<long>& counts,
                                    const RVec& kernel_diag,
                                    const RVec& chi_diag) {
  if (counts.size() != static_cast<std::size_t>(kernel_diag.size()) ||
      counts.size() != static_cast<std::size_t>(chi_diag.size()))
    throw std::invalid_argument("histogram size mismatch");
  const long total = std::accumulate(counts.begin(), counts.end(), 0L);
  if (total <= 0) throw std::invalid_argument("empty histogram");
  double num = 0, den = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    const double f = static_cast<double>(counts[j]) / total;
    num += f * chi_diag(j) * kernel_diag(j);
    den += f * kernel_diag(j);
  }
  if (std::abs(den) < 10.0 / total)
    throw UnstableEstimateError("singlet-kernel estimate too close to zero");
  return num / den;
}

// ---------------------------------------------------------------------------

FreeEnergyCost::FreeEnergyCost(const VqeConfig& cfg)
    : cfg_(cfg), h_(build_hamiltonian(cfg.model())) {
  cfg_.validate();
  est_ = make_energy_estimator(h_);
  kernel_ = build_kernel(cfg_.model()).diagonal;
  chi_ = diagonal_values(build_chiral(cfg_.model()));
}

RVec FreeEnergyCost::theta_of(const RVec& x) const {
  return x.head(theta_count(cfg_.group));
}

RVec FreeEnergyCost::phi_of(const RVec& x) const {
  return x.tail(phi_count(cfg_.group));
}

Mat FreeEnergyCost::state(const RVec& x, std::mt19937_64& rng,
                          RVec* theta_used) const {
  if (x.size() != dimension())
    throw std::invalid_argument("parameter vector has wrong length");
  if (cfg_.noise.enabled()) {
    NoisyState s = apply_noise(cfg_.group, theta_of(x), phi_of(x), cfg_.noise, rng);
    if (theta_used) *theta_used = s.theta_used;
    return s.state.rho;
  }
  if (theta_used) *theta_used = theta_of(x);
  return ansatz_density_matrix(cfg_.group, theta_of(x), phi_of(x)).rho;
}

double FreeEnergyCost::operator()(const RVec& x, std::mt19937_64& rng) const {
  RVec theta;
  const Mat rho = state(x, rng, &theta);
  return estimate_energy(rho, est_, cfg_.shots, rng) -
         cfg_.T * ancilla_entropy(theta);
}

double FreeEnergyCost::exact(const RVec& x) const {
  std::mt19937_64 unused(0);
  const Mat rho = ansatz_density_matrix(cfg_.group, theta_of(x), phi_of(x)).rho;
  return estimate_energy(rho, est_, 0, unused) -
         cfg_.T * ancilla_entropy(theta_of(x));
}

double FreeEnergyCost::chi0_sample(const RVec& x, std::mt19937_64& rng) const {
  const RVec p = populations(state(x, rng, nullptr));
  if (cfg_.exact()) return restricted_expectation_diagonal(p, chi_, kernel_);
  return projected_chiral_from_counts(sample_counts(p, cfg_.shots, rng),
                                      kernel_, chi_);
}

double FreeEnergyCost::chi0_exact(const RVec& x) const {
  const Mat rho = ansatz_density_matrix(cfg_.group, theta_of(x), phi_of(x)).rho;
  return restricted_expectation_diagonal(populations(rho), chi_, kernel_);
}

// ---------------------------------------------------------------------------

SearchBounds ansatz_bounds(Group g) {
  const int nt = theta_count(g), np = phi_count(g);
  SearchBounds b{RVec(nt + np), RVec(nt + np)};
  b.lower.head(nt).setZero();
  b.upper.head(nt).setConstant(kPi);
  b.lower.tail(np).setConstant(-kPi);
  b.upper.tail(np).setConstant(kPi);
  return b;
}

SearchResult mesh_direct_search(const std::function<double(const RVec&)>& cost,
                                const RVec& init, const SearchBounds& bounds,
                                const SearchOptions& opt) {
  const Eigen::Index n = init.size();
  if (bounds.lower.size() != n || bounds.upper.size() != n)
    throw std::invalid_argument("bounds do not match the initial point");
  if (!(opt.mesh_final > 0 && opt.mesh_final < opt.mesh_init) ||
      opt.max_evals < 1)
    throw std::invalid_argument("bad search options");

  SearchResult r;
  r.best = init.cwiseMax(bounds.lower).cwiseMin(bounds.upper);
  auto record = [&](double f) {
    r.trace.push_back(f);
    r.best_trace.push_back(r.best_trace.empty() ? f
                                                : std::min(r.best_trace.back(), f));
    ++r.evals;
  };
  r.best_cost = cost(r.best);
  record(r.best_cost);

  // Directions 2i (+e_i) and 2i+1 (-e_i).
  std::vector<Eigen::Index> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  Eigen::Index last_success = -1;
  double mesh = opt.mesh_init;
  while (mesh >= opt.mesh_final && r.evals < opt.max_evals) {
    std::vector<Eigen::Index> poll = order;
    if (last_success >= 0) {
      poll.erase(std::find(poll.begin(), poll.end(), last_success));
      poll.insert(poll.begin(), last_success);
    }
    bool improved = false;
    for (Eigen::Index d : poll) {
      if (r.evals >= opt.max_evals) break;
      const Eigen::Index i = d / 2;
      RVec y = r.best;
      y(i) += (d % 2 == 0 ? mesh : -mesh);
      y(i) = std::clamp(y(i), bounds.lower(i), bounds.upper(i));
      if (y(i) == r.best(i)) continue;
      const double f = cost(y);
      record(f);
      if (f < r.best_cost) {
        r.best = y;
        r.best_cost = f;
        last_success = d;
        improved = true;
        break;
      }
    }
    if (improved) {
      if (opt.expand) mesh = std::min(2 * mesh, opt.mesh_init);
    } else if (r.evals < opt.max_evals) {
      mesh *= 0.5;
    }
  }
  r.converged = mesh < opt.mesh_final;
  r.final_mesh = mesh;
  return r;
}

// ---------------------------------------------------------------------------

RVec default_initial_point(Group g) {
  RVec x = RVec::Zero(theta_count(g) + phi_count(g));
  x.head(theta_count(g)).setConstant(kPi / 2);
  const int z_layer = theta_count(g) + (g == Group::SU2 ? 1 : 6);
  for (int k = 0; k < theta_count(g); ++k)
    x(z_layer + k) = (k % 2 == 0 ? kPi / 2 : -kPi / 2);
  return x;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

VqeResult run_vqe(const VqeConfig& cfg) {
  return run_vqe(cfg, default_initial_point(cfg.group));
}

VqeResult run_vqe(const VqeConfig& cfg, const RVec& init) {
  const FreeEnergyCost model(cfg);
  std::mt19937_64 rng(cfg.seed);
  const SearchResult s = mesh_direct_search(
      [&](const RVec& x) { return model(x, rng); }, init,
      ansatz_bounds(cfg.group),
      SearchOptions{cfg.max_evals, cfg.mesh_init, cfg.mesh_final});

  VqeResult r;
  r.config = cfg;
  r.theta = model.theta_of(s.best);
  r.phi = model.phi_of(s.best);
  r.free_energy_trace = s.trace;
  r.best_trace = s.best_trace;
  r.best_cost = s.best_cost;
  r.converged = s.converged;
  r.evals_used = s.evals;
  r.exact_free_energy = model.exact(s.best);
  const EigenCache spectrum = diagonalize(model.hamiltonian().full);
  r.gibbs_free_energy = cfg.T > 0 ? gibbs_free_energy(spectrum, cfg.T)
                                  : spectrum.values.minCoeff();

  for (int k = 0; k < cfg.chi0_repeats; ++k)
    r.chi0_estimates.push_back(model.chi0_sample(s.best, rng));
  const double n = static_cast<double>(r.chi0_estimates.size());
  r.chi0_mean =
      std::accumulate(r.chi0_estimates.begin(), r.chi0_estimates.end(), 0.0) / n;
  double var = 0;
  for (double v : r.chi0_estimates) var += (v - r.chi0_mean) * (v - r.chi0_mean);
  r.chi0_std = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  if (cfg.T > 0)
    r.chi0_ed = PhaseEvaluator(cfg.group, 2, cfg.m, cfg.x).evaluate(cfg.T, cfg.mu).chi0;
  return r;
}

std::vector<VqeResult> run_vqe_chain(const VqeConfig& cfg,
                                     const std::vector<double>& mus) {
  std::vector<VqeResult> out;
  RVec init = default_initial_point(cfg.group);
  for (std::size_t k = 0; k < mus.size(); ++k) {
    VqeConfig c = cfg;
    c.mu = mus[k];
    c.seed = derive_seed(cfg.seed, k);
    out.push_back(run_vqe(c, init));
    init.resize(out.back().theta.size() + out.back().phi.size());
    init << out.back().theta, out.back().phi;
  }
  return out;
}

BoxSummary summarize(double mu, std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("no values to summarize");
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double h = (values.size() - 1) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, values.size() - 1);
    return values[lo] + (h - lo) * (values[hi] - values[lo]);
  };
  BoxSummary b;
  b.mu = mu;
  b.median = quantile(0.5);
  b.q1 = quantile(0.25);
  b.q3 = quantile(0.75);
  b.values = std::move(values);
  return b;
}

std::vector<BoxSummary> run_ensemble(const VqeConfig& cfg,
                                     const std::vector<double>& mus,
                                     int trials, int jobs,
                                     std::vector<std::vector<VqeResult>>* runs) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<std::vector<VqeResult>> all(trials);
  parallel_for(trials, jobs, [&](int t) {
    VqeConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(t));
    all[t] = run_vqe_chain(c, mus);
  });
  std::vector<BoxSummary> boxes;
  for (std::size_t k = 0; k < mus.size(); ++k) {
    std::vector<double> v;
    for (const auto& chain : all) v.push_back(chain[k].chi0_mean);
    boxes.push_back(summarize(mus[k], std::move(v)));
  }
  if (runs) *runs = std::move(all);
  return boxes;
}

}  // namespace lgt

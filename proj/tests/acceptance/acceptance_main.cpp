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


// Acceptance checks. Prints one PASS or FAIL line per criterion, followed by
// indented detail lines, and exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lgt/io.hpp"
#include "lgt/transpile.hpp"
#include "lgt/vqe.hpp"

using namespace lgt;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { details.push_back("info " + what); }
};

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

ModelParams params(Group g, int n, double mu = 0.0) { return {g, n, 0.5, 1.0, mu}; }

Mat random_density(int dim, int rank, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Mat a(dim, rank);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = cplx(n(rng), n(rng));
  Mat rho = a * a.adjoint();
  return rho / rho.trace();
}

// 1 -------------------------------------------------------------------------

Outcome projector_fidelity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const SingletKernel k2 = kernel_su2(2);
  double d2 = k2.pauli_decomp.distance(kernel_closed_form_two_sites(Group::SU2));
  o.check(d2 < 1e-12, format("SU(2) N=2 max coefficient deviation %.2e (tol 1e-12)", d2));
  const SingletKernel k3 = kernel_su3(2);
  double d3 = k3.pauli_decomp.distance(kernel_closed_form_two_sites(Group::SU3));
  o.check(d3 < 1e-6, format("SU(3) N=2 max coefficient deviation %.2e (tol 1e-6)", d3));
  const double t = seconds_since(t0);
  o.check(t < 5, format("runtime %.2f s (limit 5 s)", t));
  return o;
}

// 2 -------------------------------------------------------------------------

Outcome trace_identity() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> n;
  for (const ModelParams& p : {params(Group::SU2, 2, 0.4), params(Group::SU2, 3, 0.4),
                               params(Group::SU3, 2, 0.4)}) {
    const ChargeSet cs = build_charges(p);
    const Mat proj = brute_force_singlet_projector(cs);
    const Mat kd = build_kernel(p).diagonal.cast<cplx>().asDiagonal();
    PauliSum casimir(p.n_qubits());
    for (const PauliSum& q : cs.charges) casimir += q * q;
    const std::vector<Mat> letters = {sum_to_matrix(build_hamiltonian(p).full),
                                      sum_to_matrix(build_chiral(p)),
                                      sum_to_matrix(build_baryon_number(p)),
                                      sum_to_matrix(casimir)};
    const Eigen::Index dim = proj.rows();
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      Mat omega = cplx(n(rng), n(rng)) * Mat::Identity(dim, dim);
      for (int term = 0; term < 4; ++term) {
        Mat word = Mat::Identity(dim, dim);
        const int len = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < len; ++k) word = word * letters[rng() % letters.size()];
        omega += cplx(n(rng), n(rng)) * word;
      }
      worst = std::max(worst, std::abs((omega * kd).trace() - (omega * proj).trace()));
    }
    o.check(worst < 1e-8, format("%s N=%d: max |Tr(OK) - Tr(OP)| = %.2e over 50 operators",
                                 group_name(p.group).c_str(), p.n_sites, worst));
  }
  const double t = seconds_since(t0);
  o.check(t < 30, format("runtime %.2f s (limit 30 s)", t));
  return o;
}

// 3 -------------------------------------------------------------------------

Outcome singlet_dimensions() {
  Outcome o;
  for (auto [g, expect] : {std::pair{Group::SU2, 5}, std::pair{Group::SU3, 6}}) {
    const ModelParams p = params(g, 2);
    const double tr = build_kernel(p).diagonal.sum();
    const long rank = singlet_basis(build_charges(p)).cols();
    o.check(std::abs(tr - expect) < 1e-9 && rank == expect,
            format("%s N=2: Tr(K) = %.12f, oracle rank %ld, expected %d",
                   group_name(g).c_str(), tr, rank, expect));
  }
  return o;
}

// 4 -------------------------------------------------------------------------

Outcome phase_diagram() {
  Outcome o;
  const PhaseEvaluator su2(Group::SU2, 2, 0.5, 1.0);
  const double cold = su2.evaluate(0.05, 0.01).chi0;
  o.check(cold < -1.5, format("SU(2) chi0(T=0.05, mu=0.01) = %.7f < -1.5", cold));

  const std::vector<double> mus = {0.01, 0.75, 1.5, 2.5, 3.5};
  const std::vector<double> frozen = {-1.3047713, -1.1271541, -0.63440651, -0.13689007,
                                      -0.020141022};
  bool monotone = true, frozen_ok = true;
  double prev = -1e9, last = 0;
  std::ostringstream vals;
  for (std::size_t k = 0; k < mus.size(); ++k) {
    const double c = su2.evaluate(0.5, mus[k]).chi0;
    monotone = monotone && c > prev;
    frozen_ok = frozen_ok && std::abs(c - frozen[k]) < 1e-6;
    prev = last = c;
    vals << (k ? ", " : "") << c;
  }
  o.check(monotone, "SU(2) T=0.5 chi0 rises monotonically in mu: " + vals.str());
  o.check(std::abs(last) < 0.1, format("SU(2) |chi0(T=0.5, mu=3.5)| = %.4f < 0.1", std::abs(last)));
  o.check(frozen_ok, "SU(2) T=0.5 values match frozen regression values to 1e-6");

  const PhaseEvaluator su3(Group::SU3, 2, 0.5, 1.0);
  const double c3 = su3.evaluate(0.5, 2.0).chi0;
  o.check(std::abs(c3 + 1.1500318) < 1e-5,
          format("SU(3) chi0(T=0.5, mu=2) = %.7f matches frozen -1.1500318", c3));

  double hot = 0;
  for (double mu : parse_grid("0:4:41")) {
    hot = std::max(hot, std::abs(su2.evaluate(1e4, mu).chi0));
    hot = std::max(hot, std::abs(su3.evaluate(1e4, mu).chi0));
  }
  o.check(hot < 1e-3, format("max |chi0(T=1e4)| over mu in [0,4], both groups = %.2e", hot));

  for (Group g : {Group::SU2, Group::SU3}) {
    const auto t0 = std::chrono::steady_clock::now();
    const PhaseTable t = phase_sweep(g, 2, 0.5, 1.0, parse_grid("0.05:2:50"),
                                     parse_grid("0:4:50"), jobs());
    const double s = seconds_since(t0);
    o.check(t.records.size() == 2500 && s < 60,
            format("%s 50x50 sweep in %.2f s (limit 60 s)", group_name(g).c_str(), s));
  }
  return o;
}

// 5 and 9 share the exact runs -----------------------------------------------

struct ExactRuns {
  std::vector<VqeResult> su2;
  VqeResult su3;
  double seconds = 0;
};

const ExactRuns& exact_runs() {
  static const ExactRuns runs = [] {
    ExactRuns r;
    const auto t0 = std::chrono::steady_clock::now();
    VqeConfig c2 = VqeConfig::defaults(Group::SU2);
    c2.shots = 0;
    c2.seed = 5;
    r.su2 = run_vqe_chain(c2, {3.5, 2.5, 1.5, 0.75, 0.01});
    VqeConfig c3 = VqeConfig::defaults(Group::SU3);
    c3.shots = 0;
    c3.mu = 2.0;
    c3.seed = 5;
    r.su3 = run_vqe(c3);
    r.seconds = seconds_since(t0);
    return r;
  }();
  return runs;
}

Outcome noiseless_vqe() {
  Outcome o;
  const ExactRuns& r = exact_runs();
  for (const VqeResult& v : r.su2) {
    const double d = v.chi0_mean - v.chi0_ed;
    o.check(std::abs(d) < 0.05 && v.evals_used <= 230,
            format("SU(2) mu=%.2f: chi0 %.5f vs ED %.5f, |diff| %.4f (tol 0.05), %d evals",
                   v.config.mu, v.chi0_mean, v.chi0_ed, std::abs(d), v.evals_used));
  }
  const double d3 = r.su3.chi0_mean - r.su3.chi0_ed;
  o.check(std::abs(d3) < 0.1 && r.su3.evals_used <= 350,
          format("SU(3) mu=2.00: chi0 %.5f vs ED %.5f, |diff| %.4f (tol 0.1), %d evals",
                 r.su3.chi0_mean, r.su3.chi0_ed, std::abs(d3), r.su3.evals_used));
  o.check(r.seconds < 600, format("runtime %.1f s (limit 600 s)", r.seconds));
  return o;
}

// 6 -------------------------------------------------------------------------

Outcome noisy_ensemble() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> mus = {3.5, 2.5, 1.5, 0.75, 0.01};
  VqeConfig cfg = VqeConfig::defaults(Group::SU2);
  cfg.noise = NoiseModel::paper();
  cfg.seed = 6;
  std::vector<std::vector<VqeResult>> runs;
  const auto boxes = run_ensemble(cfg, mus, 20, jobs(), &runs);

  int inside = 0;
  bool signs = true, ordered = true;
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const BoxSummary& b = boxes[k];
    const double ed = runs.front()[k].chi0_ed;
    const double lo = b.q1 - 1.5 * b.iqr(), hi = b.q3 + 1.5 * b.iqr();
    const bool in = ed > lo && ed < hi;
    inside += in;
    signs = signs && (b.median < 0) == (ed < 0);
    if (k > 0) ordered = ordered && b.median < boxes[k - 1].median;
    o.info(format("SU(2) mu=%.2f: median %.4f, Q1 %.4f, Q3 %.4f, ED %.4f %s", b.mu,
                  b.median, b.q1, b.q3, ed, in ? "inside" : "outside"));
  }
  o.check(signs, "SU(2) median signs match ED");
  o.check(ordered, "SU(2) medians ordered in mu like ED");
  o.check(inside >= 4, format("ED inside whiskers at %d of 5 SU(2) points (need 4)", inside));

  VqeConfig c3 = VqeConfig::defaults(Group::SU3);
  c3.noise = NoiseModel::paper();
  c3.seed = 6;
  std::vector<std::vector<VqeResult>> runs3;
  const auto box3 = run_ensemble(c3, {2.0}, 20, jobs(), &runs3).front();
  const double ed3 = runs3.front().front().chi0_ed;
  o.check((box3.median < 0) == (ed3 < 0),
          format("SU(3) mu=2: median %.4f, Q1 %.4f, Q3 %.4f, ED %.4f, sign matches",
                 box3.median, box3.q1, box3.q3, ed3));
  const double t = seconds_since(t0);
  o.check(t < 3600, format("runtime %.1f s (limit 3600 s)", t));
  return o;
}

// 7 -------------------------------------------------------------------------

Outcome circuit_contracts() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (auto [g, limit] : {std::pair{Group::SU2, 8}, std::pair{Group::SU3, 9}}) {
    int strict_ms = 0, reduced_ms = 0;
    double worst = 0, worst_reduced = 0;
    const Mat d = circuit_unitary(diagonal_frame(g));
    for (int trial = 0; trial < 200; ++trial) {
      RVec phi(phi_count(g));
      for (auto& v : phi) v = u(rng);
      Circuit ideal = system_circuit(g, phi);
      ideal.append(template_measurement_circuit(g));
      const Mat target = circuit_unitary(ideal);

      Circuit strict = template_system_circuit(g, phi);
      strict.append(template_measurement_circuit(g));
      const Circuit native = transpile_to_native(strict);
      strict_ms = std::max(strict_ms, native.ms_gate_count());
      worst = std::max(worst, phase_insensitive_distance(circuit_unitary(native), target));

      // The reduced circuit drops the leading D, which acts trivially on the
      // diagonal input mixture: W D = ideal.
      Circuit reduced = reduced_system_circuit(g, phi);
      reduced.append(reduced_measurement_circuit(g));
      const Circuit rn = transpile_to_native(reduced);
      reduced_ms = std::max(reduced_ms, rn.ms_gate_count());
      worst_reduced = std::max(
          worst_reduced, phase_insensitive_distance(circuit_unitary(rn) * d, target));
    }
    o.check(strict_ms <= limit && worst < 1e-10,
            format("%s system+measurement: %d MS gates (limit %d), max distance %.2e over "
                   "200 draws",
                   group_name(g).c_str(), strict_ms, limit, worst));
    o.info(format("%s reduced form on diagonal input: %d MS gates, max distance %.2e",
                  group_name(g).c_str(), reduced_ms, worst_reduced));
  }
  const double t = seconds_since(t0);
  o.check(t < 60, format("runtime %.1f s (limit 60 s)", t));
  return o;
}

// 8 -------------------------------------------------------------------------

Outcome entropy_identities() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 2 * kPi), v(-kPi, kPi);
  double worst_s = 0, worst_eig = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Group g = trial % 2 ? Group::SU3 : Group::SU2;
    RVec th(theta_count(g));
    for (auto& a : th) a = u(rng);
    const RVec p = product_probabilities(th);
    worst_s = std::max(worst_s, std::abs(ancilla_entropy(th) - shannon_entropy(p)));
    if (trial < 200) {
      RVec phi(phi_count(g));
      for (auto& a : phi) a = v(rng);
      const Mat rho = ansatz_density_matrix(g, th, phi).rho;
      Eigen::SelfAdjointEigenSolver<Mat> es(rho);
      RVec sorted = p;
      std::sort(sorted.begin(), sorted.end());
      worst_eig = std::max(worst_eig, (es.eigenvalues() - sorted).cwiseAbs().maxCoeff());
    }
  }
  o.check(worst_s < 1e-12, format("analytic vs enumerated entropy: max diff %.2e over 1000 "
                                  "draws", worst_s));
  o.check(worst_eig < 1e-12, format("rho spectrum vs product probabilities: max diff %.2e "
                                    "over 200 draws", worst_eig));
  return o;
}

// 9 -------------------------------------------------------------------------

Outcome gibbs_bound() {
  Outcome o;
  std::mt19937_64 rng(9);
  for (const ModelParams& p : {params(Group::SU2, 2, 1.5), params(Group::SU3, 2, 2.0)}) {
    const QubitHamiltonian h = build_hamiltonian(p);
    const EigenCache e = diagonalize(h.full);
    const int dim = static_cast<int>(e.values.size());
    int violations = 0;
    double min_gap = 1e300;
    for (double T : {0.05, 0.2, 0.5, 1.0, 5.0}) {
      const double fg = gibbs_free_energy(e, T);
      for (int k = 0; k < 100; ++k) {
        const int rank = 1 + static_cast<int>(rng() % dim);
        const double gap = free_energy(random_density(dim, rank, rng), h.full, T) - fg;
        min_gap = std::min(min_gap, gap);
        violations += gap < 0;
      }
    }
    o.check(violations == 0, format("%s: F(rho) - F_G >= 0 for 500 random states, min gap "
                                    "%.3e",
                                    group_name(p.group).c_str(), min_gap));
  }
  const ExactRuns& r = exact_runs();
  std::vector<const VqeResult*> all;
  for (const auto& v : r.su2) all.push_back(&v);
  all.push_back(&r.su3);
  for (const VqeResult* v : all)
    o.check(v->exact_free_energy >= v->gibbs_free_energy - 1e-9,
            format("%s mu=%.2f VQE F %.6f >= F_G %.6f", group_name(v->config.group).c_str(),
                   v->config.mu, v->exact_free_energy, v->gibbs_free_energy));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 projector fidelity", projector_fidelity},
      {"2 trace-identity suite", trace_identity},
      {"3 singlet dimensions", singlet_dimensions},
      {"4 phase-diagram reproduction", phase_diagram},
      {"5 noiseless VQE parity", noiseless_vqe},
      {"6 noisy-ensemble property", noisy_ensemble},
      {"7 circuit contracts", circuit_contracts},
      {"8 entropy and mixture identities", entropy_identities},
      {"9 Gibbs variational bound", gibbs_bound},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name
              << format(" (%.1f s)", seconds_since(t0)) << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
  }
  std::cout << (9 - failed) << " of 9 criteria passed\n";
  return failed ? 1 : 0;
}

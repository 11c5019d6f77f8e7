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

// lgt: command-line front end.
//
//   lgt hamiltonian dump   --group su2 --N 2 --m 0.5 --x 1 --mu 0
//   lgt projector verify   --group su3 --N 2
//   lgt ed-sweep           --group su2 --T-grid 0.05:2:50 --mu-grid 0:4:50
//   lgt vqe                --group su2 --T 0.5 --mu 3.5 2.5 1.5 0.75 0.01
//   lgt circuit stats      --group su3 --which native
//
// Exit codes: 0 success, 1 verification failure or runtime error,
// 2 usage error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lgt/errors.hpp"
#include "lgt/io.hpp"
#include "lgt/transpile.hpp"

namespace fs = std::filesystem;
using namespace lgt;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

struct ModelOptions {
  std::string group = "su2";
  int n_sites = 2;
  double m = 0.5;
  double x = 1.0;
  double mu = 0.0;

  void add_to(CLI::App* app, bool with_mu) {
    app->add_option("--group", group, "Gauge group")
        ->check(CLI::IsMember({"su2", "su3"}))
        ->capture_default_str();
    app->add_option("--N", n_sites, "Number of lattice sites")->capture_default_str();
    app->add_option("--m", m, "Bare mass")->capture_default_str();
    app->add_option("--x", x, "Inverse coupling x")->capture_default_str();
    if (with_mu)
      app->add_option("--mu", mu, "Chemical potential")->capture_default_str();
  }

  ModelParams params() const {
    ModelParams p{parse_group(group), n_sites, m, x, mu};
    p.validate();
    return p;
  }
  json to_json() const {
    return {{"group", group}, {"N", n_sites}, {"m", m}, {"x", x}, {"mu", mu}};
  }
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void write_manifest(const std::string& path, RunManifest m, const Stopwatch& sw) {
  m.version = library_version();
  m.wall_clock_seconds = sw.seconds();
  write_json_file(path, to_json(m));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

// hamiltonian dump ----------------------------------------------------------

struct DumpOptions {
  ModelOptions model;
  std::string format = "text";
  std::string out;
};

int run_dump(const DumpOptions& o) {
  const QubitHamiltonian h = build_hamiltonian(o.model.params());
  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) throw std::runtime_error("cannot write " + o.out);
  }
  std::ostream& os = o.out.empty() ? std::cout : file;
  if (o.format == "json") {
    os << json{{"params", o.model.to_json()},
               {"full", to_json(h.full)},
               {"diagonal", to_json(h.h_diag)},
               {"offdiagonal", to_json(h.h_offdiag)}}
              .dump(2)
       << '\n';
    return 0;
  }
  os << "# " << group_name(h.params.group) << " N=" << h.params.n_sites
     << " m=" << fmt(h.params.mass) << " x=" << fmt(h.params.coupling_x)
     << " mu=" << fmt(h.params.chem_potential) << " terms=" << h.full.size()
     << '\n';
  for (const auto& [p, c] : h.full.term_list())
    os << std::setw(20) << fmt(c.real()) << "  " << p.letters() << '\n';
  return 0;
}

// projector verify ----------------------------------------------------------

struct VerifyOptions {
  ModelOptions model;
  int grid = 201;
  double tol = 1e-8;
  std::string out;
};

int run_verify(const VerifyOptions& o) {
  ModelParams p = o.model.params();
  const SingletKernel k = build_kernel(p, HaarQuadrature{o.grid});
  const ChargeSet cs = build_charges(p);
  const Mat proj = brute_force_singlet_projector(cs);
  const Mat kd = k.diagonal.cast<cplx>().asDiagonal();

  // Gauge-invariant probes: polynomials in H, chi, B and the Casimir.
  const Mat h = sum_to_matrix(build_hamiltonian(p).full);
  const Mat chi = sum_to_matrix(build_chiral(p));
  const Mat b = sum_to_matrix(build_baryon_number(p));
  const Mat id = Mat::Identity(h.rows(), h.cols());
  const std::vector<Mat> probes = {id,      h,           chi,     b,
                                   h * h,   h * chi * h, chi * chi,
                                   h * b + b * h};
  double residual = 0;
  for (const auto& om : probes)
    residual = std::max(residual, std::abs((om * kd).trace() - (om * proj).trace()));

  const double trace_k = k.diagonal.sum();
  const long rank = proj.cols() ? std::lround(proj.trace().real()) : 0;
  bool ok = residual < o.tol && std::abs(trace_k - rank) < o.tol;

  json report = {{"params", o.model.to_json()},
                 {"trace_K", trace_k},
                 {"oracle_singlet_dimension", rank},
                 {"max_trace_identity_residual", residual}};
  std::cout << "Tr(K)                      " << fmt(trace_k) << '\n'
            << "singlet dimension (oracle) " << rank << '\n'
            << "max trace residual         " << std::scientific
            << std::setprecision(3) << residual << std::defaultfloat << '\n';

  if (p.n_sites == 2) {
    const double coeff_tol = p.group == Group::SU2 ? 1e-12 : 1e-6;
    const PauliSum ref = kernel_closed_form_two_sites(p.group);
    json rows = json::array();
    double worst = 0;
    PauliSum all = ref + k.pauli_decomp;  // union of supports
    for (const auto& [s, unused] : all.term_list()) {
      const double a = k.pauli_decomp.coefficient(s).real();
      const double r = ref.coefficient(s).real();
      worst = std::max(worst, std::abs(a - r));
      rows.push_back({{"pauli", s.letters()}, {"computed", a}, {"closed_form", r}});
      std::cout << "  " << s.letters() << "  " << std::setw(14) << fmt(a)
                << "  " << std::setw(14) << fmt(r) << '\n';
    }
    std::cout << "max coefficient deviation  " << std::scientific
              << std::setprecision(3) << worst << std::defaultfloat << '\n';
    report["coefficients"] = rows;
    report["max_coefficient_deviation"] = worst;
    ok = ok && worst < coeff_tol;
  }
  report["passed"] = ok;
  if (!o.out.empty()) write_json_file(o.out, report);
  std::cout << (ok ? "verification passed" : "verification FAILED") << '\n';
  return ok ? 0 : kExitVerify;
}

// ed-sweep ------------------------------------------------------------------

struct SweepOptions {
  ModelOptions model;
  std::string t_grid = "0.05:2:50";
  std::string mu_grid = "0:4:50";
  int jobs = 1;
  std::string out = "phase_sweep.csv";
};

int run_sweep(const SweepOptions& o) {
  Stopwatch sw;
  const ModelParams p = o.model.params();
  const auto ts = parse_grid(o.t_grid);
  const auto mus = parse_grid(o.mu_grid);
  for (double t : ts)
    if (!(t > 0)) throw std::invalid_argument("temperatures must be positive");
  const PhaseTable table =
      phase_sweep(p.group, p.n_sites, p.mass, p.coupling_x, ts, mus, o.jobs);
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  write_phase_csv(f, table);
  f.close();

  json cfg = o.model.to_json();
  cfg.erase("mu");
  cfg["T_grid"] = o.t_grid;
  cfg["mu_grid"] = o.mu_grid;
  cfg["jobs"] = o.jobs;
  write_manifest(o.out + ".manifest.json",
                 {"ed-sweep", cfg, 0, "", {o.out}, 0.0}, sw);
  std::cout << "wrote " << table.records.size() << " rows to " << o.out << '\n';
  return 0;
}

// vqe -----------------------------------------------------------------------

struct VqeOptions {
  ModelOptions model;
  double T = 0.5;
  std::vector<double> mus = {0.0};
  int shots = -1;
  int max_evals = -1;
  double mesh_init = -1;
  double mesh_final = 0.01;
  std::string noise = "off";
  std::uint64_t seed = 1;
  std::string warm_start;
  int trials = 1;
  int jobs = 1;
  std::string out_dir = "vqe_out";
};

std::string point_stem(const VqeConfig& c) {
  std::ostringstream os;
  os << "vqe_" << group_name(c.group) << "_T" << fmt(c.T) << "_mu" << fmt(c.mu);
  return os.str();
}

int run_vqe_cmd(const VqeOptions& o) {
  Stopwatch sw;
  const ModelParams p = o.model.params();
  if (p.n_sites != 2) throw std::invalid_argument("the ansatz is defined for N = 2");
  VqeConfig cfg = VqeConfig::defaults(p.group);
  cfg.T = o.T;
  cfg.m = p.mass;
  cfg.x = p.coupling_x;
  if (o.shots >= 0) cfg.shots = o.shots;
  if (o.max_evals > 0) cfg.max_evals = o.max_evals;
  if (o.mesh_init > 0) cfg.mesh_init = o.mesh_init;
  cfg.mesh_final = o.mesh_final;
  cfg.noise = o.noise == "paper" ? NoiseModel::paper() : NoiseModel::none();
  cfg.seed = o.seed;
  cfg.mu = o.mus.front();
  cfg.validate();
  if (o.trials < 1) throw std::invalid_argument("--trials must be >= 1");

  fs::create_directories(o.out_dir);
  RunManifest manifest{"vqe", to_json(cfg), cfg.seed, "", {}, 0.0};
  manifest.config["mu_list"] = o.mus;
  manifest.config["trials"] = o.trials;
  manifest.config["warm_start"] = o.warm_start;

  if (o.trials > 1) {
    std::vector<std::vector<VqeResult>> runs;
    const auto boxes = run_ensemble(cfg, o.mus, o.trials, o.jobs, &runs);
    json out = {{"config", to_json(cfg)}, {"trials", o.trials}, {"boxes", json::array()}};
    std::cout << "mu        median      q1          q3          iqr         ed\n";
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      json b = to_json(boxes[k]);
      b["chi0_ed"] = runs.front()[k].chi0_ed;
      out["boxes"].push_back(b);
      std::cout << std::left << std::setw(10) << fmt(boxes[k].mu) << std::setw(12)
                << fmt(boxes[k].median) << std::setw(12) << fmt(boxes[k].q1)
                << std::setw(12) << fmt(boxes[k].q3) << std::setw(12)
                << fmt(boxes[k].iqr()) << fmt(runs.front()[k].chi0_ed) << '\n';
    }
    const std::string path = (fs::path(o.out_dir) / "ensemble.json").string();
    write_json_file(path, out);
    manifest.outputs.push_back(path);
  } else {
    RVec init = default_initial_point(cfg.group);
    if (!o.warm_start.empty()) init = parameters_from_json(read_json_file(o.warm_start));
    for (std::size_t k = 0; k < o.mus.size(); ++k) {
      VqeConfig c = cfg;
      c.mu = o.mus[k];
      c.seed = derive_seed(cfg.seed, k);
      const VqeResult r = run_vqe(c, init);
      init.resize(r.theta.size() + r.phi.size());
      init << r.theta, r.phi;
      const std::string stem = (fs::path(o.out_dir) / point_stem(c)).string();
      write_json_file(stem + ".json", to_json(r));
      std::ofstream trace(stem + ".trace.csv");
      write_trace_csv(trace, r);
      manifest.outputs.push_back(stem + ".json");
      manifest.outputs.push_back(stem + ".trace.csv");
      std::cout << "mu=" << fmt(c.mu) << "  chi0=" << fmt(r.chi0_mean) << " +- "
                << fmt(r.chi0_std) << "  ed=" << fmt(r.chi0_ed)
                << "  F=" << fmt(r.exact_free_energy)
                << "  F_gibbs=" << fmt(r.gibbs_free_energy)
                << "  evals=" << r.evals_used << '\n';
    }
  }
  write_manifest((fs::path(o.out_dir) / "manifest.json").string(), manifest, sw);
  return 0;
}

// circuit stats -------------------------------------------------------------

struct StatsOptions {
  std::string group = "su2";
  std::string which = "native";
  std::uint64_t seed = 1;
  bool as_json = false;
};

int run_stats(const StatsOptions& o) {
  const Group g = parse_group(o.group);
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  RVec theta(theta_count(g)), phi(phi_count(g));
  for (auto& v : theta) v = std::abs(u(rng));
  for (auto& v : phi) v = u(rng);

  Circuit c;
  if (o.which == "ansatz") {
    c = build_ansatz(g, theta, phi);
  } else if (o.which == "system") {
    c = system_circuit(g, phi);
  } else if (o.which == "template") {
    c = template_system_circuit(g, phi);
    c.append(template_measurement_circuit(g));
  } else if (o.which == "measurement") {
    c = build_measurement_circuit(
            hopping_family(build_hamiltonian({g, 2, 0.5, 1.0, 0.0})))
            .circuit;
  } else if (o.which == "native") {
    Circuit t = template_system_circuit(g, phi);
    t.append(template_measurement_circuit(g));
    c = transpile_to_native(t);
  } else {  // reduced
    Circuit t = reduced_system_circuit(g, phi);
    t.append(reduced_measurement_circuit(g));
    c = transpile_to_native(t);
  }
  if (o.as_json) {
    std::cout << to_json(c).dump(2) << '\n';
    return 0;
  }
  std::cout << o.which << " circuit, " << group_name(g) << ", "
            << c.n_system_qubits << " system + " << c.n_ancillae
            << " ancilla qubits, " << c.gates.size() << " gates\n";
  for (const auto& [name, count] : c.census())
    std::cout << "  " << std::left << std::setw(6) << name << count << '\n';
  std::cout << "MS gates: " << c.ms_gate_count() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal lattice gauge theory toolkit"};
  app.set_config("--config", "", "Flat key=value configuration file");
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  DumpOptions dump;
  auto* ham = app.add_subcommand("hamiltonian", "Qubit Hamiltonian tools");
  ham->require_subcommand(1);
  auto* ham_dump = ham->add_subcommand("dump", "Print the Pauli decomposition");
  dump.model.add_to(ham_dump, true);
  ham_dump->add_option("--format", dump.format)
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  ham_dump->add_option("--out", dump.out, "Output file (default stdout)");

  VerifyOptions verify;
  auto* proj = app.add_subcommand("projector", "Singlet kernel tools");
  proj->require_subcommand(1);
  auto* proj_verify = proj->add_subcommand(
      "verify", "Check the kernel against the brute-force singlet projector");
  verify.model.add_to(proj_verify, false);
  proj_verify->add_option("--grid", verify.grid, "Haar nodes per axis (SU(3))")
      ->capture_default_str();
  proj_verify->add_option("--tol", verify.tol, "Trace-identity tolerance")
      ->capture_default_str();
  proj_verify->add_option("--out", verify.out, "JSON report path");

  SweepOptions sweep;
  auto* ed = app.add_subcommand("ed-sweep", "Exact (T, mu) phase diagram");
  sweep.model.add_to(ed, false);
  ed->add_option("--T-grid", sweep.t_grid, "start:stop:count")->capture_default_str();
  ed->add_option("--mu-grid", sweep.mu_grid, "start:stop:count")->capture_default_str();
  ed->add_option("--jobs", sweep.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  ed->add_option("--out", sweep.out, "CSV path")->capture_default_str();

  VqeOptions vqe;
  auto* vq = app.add_subcommand("vqe", "Variational free-energy minimization");
  vqe.model.add_to(vq, false);
  vq->add_option("--T", vqe.T)->capture_default_str();
  vq->add_option("--mu", vqe.mus, "One or more mu values, run as a warm-start chain")
      ->delimiter(',')
      ->capture_default_str();
  vq->add_option("--shots", vqe.shots, "Shots per basis; 0 = exact (default by group)");
  vq->add_option("--max-evals", vqe.max_evals, "Evaluation budget (default by group)");
  vq->add_option("--mesh-init", vqe.mesh_init, "Initial mesh (default by group)");
  vq->add_option("--mesh-final", vqe.mesh_final)->capture_default_str();
  vq->add_option("--noise", vqe.noise)
      ->check(CLI::IsMember({"off", "paper"}))
      ->capture_default_str();
  vq->add_option("--seed", vqe.seed)->envname("LGT_SEED")->capture_default_str();
  vq->add_option("--warm-start", vqe.warm_start, "VqeResult JSON to start from")
      ->check(CLI::ExistingFile);
  vq->add_option("--trials", vqe.trials, "Independent noisy chains")->capture_default_str();
  vq->add_option("--jobs", vqe.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  vq->add_option("--out-dir", vqe.out_dir)->capture_default_str();

  StatsOptions stats;
  auto* circ = app.add_subcommand("circuit", "Circuit tools");
  circ->require_subcommand(1);
  auto* circ_stats = circ->add_subcommand("stats", "Gate census and MS count");
  circ_stats->add_option("--group", stats.group)
      ->check(CLI::IsMember({"su2", "su3"}))
      ->capture_default_str();
  circ_stats->add_option("--which", stats.which)
      ->check(CLI::IsMember(
          {"ansatz", "system", "template", "measurement", "native", "reduced"}))
      ->capture_default_str();
  circ_stats->add_option("--seed", stats.seed, "Seed for the sample angles")
      ->envname("LGT_SEED")
      ->capture_default_str();
  circ_stats->add_flag("--json", stats.as_json, "Print the circuit as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ham_dump) return run_dump(dump);
    if (*proj_verify) return run_verify(verify);
    if (*ed) return run_sweep(sweep);
    if (*vq) return run_vqe_cmd(vqe);
    if (*circ_stats) return run_stats(stats);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitUsage;
}

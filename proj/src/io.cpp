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

#include "lgt/io.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lgt {
namespace {

double parse_number(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

std::vector<double> to_vector(const RVec& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() == 1) return {parse_number(parts[0])};
  if (parts.size() != 3)
    throw std::invalid_argument("grid must be start:stop:count, got '" + spec + "'");
  const double a = parse_number(parts[0]), b = parse_number(parts[1]);
  const double n = parse_number(parts[2]);
  if (n < 1 || n != static_cast<int>(n))
    throw std::invalid_argument("grid count must be a positive integer");
  const int count = static_cast<int>(n);
  if (count == 1) return {a};
  std::vector<double> g(count);
  for (int k = 0; k < count; ++k) g[k] = a + (b - a) * k / (count - 1);
  return g;
}

json to_json(const PauliSum& s) {
  json terms = json::array();
  for (const auto& [p, c] : s.term_list())
    terms.push_back({{"pauli", p.letters()}, {"re", c.real()}, {"im", c.imag()}});
  return {{"n_qubits", s.n_qubits()}, {"terms", terms}};
}

PauliSum pauli_sum_from_json(const json& j) {
  PauliSum s(j.at("n_qubits").get<int>());
  for (const auto& t : j.at("terms"))
    s.add_term(PauliString::from_label(t.at("pauli").get<std::string>()),
               cplx(t.at("re").get<double>(), t.value("im", 0.0)));
  return s;
}

json to_json(const Gate& g) {
  json j = {{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
  if (g.is_rotation()) j["angle"] = g.angle;
  if (g.kind == GateKind::PAULI) j["axes"] = g.axes;
  if (g.slot >= 0) j["slot"] = g.slot;
  return j;
}

json to_json(const Circuit& c) {
  json gates = json::array();
  for (const auto& g : c.gates) gates.push_back(to_json(g));
  return {{"n_system_qubits", c.n_system_qubits},
          {"n_ancillae", c.n_ancillae},
          {"parameter_slots", c.parameter_slots},
          {"ms_gate_count", c.ms_gate_count()},
          {"census", c.census()},
          {"gates", gates}};
}

Circuit circuit_from_json(const json& j) {
  Circuit c;
  c.n_system_qubits = j.at("n_system_qubits").get<int>();
  c.n_ancillae = j.value("n_ancillae", 0);
  c.parameter_slots = j.value("parameter_slots", 0);
  for (const auto& g : j.at("gates"))
    c.add({parse_gate_kind(g.at("kind").get<std::string>()),
           g.at("qubits").get<std::vector<int>>(), g.value("angle", 0.0),
           g.value("axes", std::string()), g.value("slot", -1)});
  return c;
}

json to_json(const NoiseModel& n) {
  return {{"overrotation_frac", n.overrotation_frac},
          {"ms_fidelity", n.ms_fidelity},
          {"overrotation", n.overrotation},
          {"depolarizing", n.depolarizing},
          {"system_overrotation", n.system_overrotation},
          {"depolarizing_p",
           n.depolarizing ? depolarizing_strength(n.ms_fidelity) : 0.0}};
}

json to_json(const VqeConfig& c) {
  return {{"group", group_name(c.group)}, {"T", c.T},
          {"mu", c.mu},                   {"m", c.m},
          {"x", c.x},                     {"shots", c.shots},
          {"max_evals", c.max_evals},     {"mesh_init", c.mesh_init},
          {"mesh_final", c.mesh_final},   {"noise", to_json(c.noise)},
          {"seed", c.seed},               {"chi0_repeats", c.chi0_repeats}};
}

json to_json(const VqeResult& r) {
  return {{"config", to_json(r.config)},
          {"optimal_theta", to_vector(r.theta)},
          {"optimal_phi", to_vector(r.phi)},
          {"best_cost", r.best_cost},
          {"exact_free_energy", r.exact_free_energy},
          {"gibbs_free_energy", r.gibbs_free_energy},
          {"chi0_ed", r.chi0_ed},
          {"chi0_estimates", r.chi0_estimates},
          {"chi0_mean", r.chi0_mean},
          {"chi0_std", r.chi0_std},
          {"converged", r.converged},
          {"evals_used", r.evals_used},
          {"free_energy_trace", r.free_energy_trace}};
}

json to_json(const BoxSummary& b) {
  return {{"mu", b.mu},   {"median", b.median}, {"q1", b.q1},
          {"q3", b.q3},   {"iqr", b.iqr()},      {"values", b.values}};
}

RVec parameters_from_json(const json& j) {
  const auto t = j.at("optimal_theta").get<std::vector<double>>();
  const auto p = j.at("optimal_phi").get<std::vector<double>>();
  RVec x(static_cast<Eigen::Index>(t.size() + p.size()));
  for (std::size_t k = 0; k < t.size(); ++k) x(k) = t[k];
  for (std::size_t k = 0; k < p.size(); ++k) x(t.size() + k) = p[k];
  return x;
}

void write_trace_csv(std::ostream& os, const VqeResult& r) {
  os << "eval,cost,best\n" << std::setprecision(12);
  for (std::size_t k = 0; k < r.free_energy_trace.size(); ++k)
    os << k + 1 << ',' << r.free_energy_trace[k] << ',' << r.best_trace[k] << '\n';
}

json to_json(const RunManifest& m) {
  return {{"subcommand", m.subcommand}, {"config", m.config},
          {"seed", m.seed},             {"version", m.version},
          {"outputs", m.outputs},       {"wall_clock_seconds", m.wall_clock_seconds}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << j.dump(2) << '\n';
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return json::parse(f);
}

std::string library_version() { return LGT_VERSION; }

}  // namespace lgt
